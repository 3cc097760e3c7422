#include "netreconf/lp_export.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace netreconf {

namespace {

std::string number(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

/// Accumulates a linear expression, wrapping long lines.
class RowWriter {
 public:
  explicit RowWriter(std::ostringstream& out) : out_(out) {}

  void begin(const std::string& name) {
    out_ << ' ' << name << ':';
    width_ = name.size() + 2;
    first_ = true;
  }

  void term(double coef, const std::string& var) {
    std::string text;
    if (coef < 0) text = "- ";
    else if (!first_) text = "+ ";
    const double mag = coef < 0 ? -coef : coef;
    if (mag != 1.0) text += number(mag) + " ";
    text += var;
    if (width_ + text.size() > 200) {
      out_ << "\n  ";
      width_ = 2;
    }
    out_ << ' ' << text;
    width_ += text.size() + 1;
    first_ = false;
  }

  void end(const std::string& sense, double rhs) { out_ << ' ' << sense << ' ' << number(rhs) << '\n'; }

 private:
  std::ostringstream& out_;
  std::size_t width_ = 0;
  bool first_ = true;
};

std::string f_var(EdgeId e) { return "f" + std::to_string(e); }
std::string x_var(EdgeId e) { return "x" + std::to_string(e); }
/// Orientation 0 runs tail -> head, 1 runs head -> tail.
std::string z_var(EdgeId e, int o, NodeId u) {
  return "z" + std::to_string(e) + "_" + std::to_string(o) + "_" + std::to_string(u);
}

}  // namespace

std::string martin_lp_text(const Network& net) {
  const ValidationReport report = validate_network(net);
  if (!report.ok()) throw std::invalid_argument("invalid network: " + report.violations.front());
  if (net.node_count() < 2) throw std::invalid_argument("model needs at least two nodes");
  const std::size_t n = net.node_count();
  const std::size_t m = net.edge_count();
  const double big_m = net.total_demand();
  std::ostringstream out;
  RowWriter row(out);

  out << "\\ Network reconfiguration: " << n << " nodes, " << m << " edges, root " << net.root() << "\n";
  out << "Minimize\n obj: [";
  std::size_t width = 0;
  for (EdgeId e = 0; e < m; ++e) {
    const std::string text = (e ? " + " : " ") + number(2.0 * net.edge(e).resistance) + " " + f_var(e) + " ^2";
    if (width + text.size() > 200) {
      out << "\n  ";
      width = 0;
    }
    out << text;
    width += text.size();
  }
  out << " ] / 2\nSubject To\n";

  for (NodeId u = 0; u < n; ++u) {
    row.begin("cons" + std::to_string(u));
    for (const Incidence& inc : net.incident(u)) {
      const Edge& edge = net.edge(inc.edge);
      if (edge.tail == edge.head) continue;
      row.term(edge.head == u ? 1.0 : -1.0, f_var(inc.edge));
    }
    row.end("=", net.demand(u));
  }

  row.begin("card");
  for (EdgeId e = 0; e < m; ++e) row.term(1.0, x_var(e));
  row.end("=", static_cast<double>(n - 1));

  for (EdgeId e = 0; e < m; ++e) {
    for (NodeId u = 0; u < n; ++u) {
      if (u == net.edge(e).tail || u == net.edge(e).head) continue;
      row.begin("link" + std::to_string(e) + "_" + std::to_string(u));
      row.term(1.0, x_var(e));
      row.term(-1.0, z_var(e, 0, u));
      row.term(-1.0, z_var(e, 1, u));
      row.end("=", 0.0);
    }
  }

  // For oriented edge (v, w): x_vw + sum over edges {v, u}, u != w, of z_{v,u,w} = 1.
  for (EdgeId e = 0; e < m; ++e) {
    for (int o = 0; o < 2; ++o) {
      const NodeId v = o == 0 ? net.edge(e).tail : net.edge(e).head;
      const NodeId w = net.edge(e).other(v);
      row.begin("deg" + std::to_string(e) + "_" + std::to_string(o));
      row.term(1.0, x_var(e));
      for (const Incidence& inc : net.incident(v)) {
        const NodeId u = inc.neighbor;
        if (u == w || u == v) continue;
        const int dir = net.edge(inc.edge).tail == v ? 0 : 1;
        row.term(1.0, z_var(inc.edge, dir, w));
      }
      row.end("=", 1.0);
    }
  }

  for (EdgeId e = 0; e < m; ++e) {
    row.begin("ub" + std::to_string(e));
    row.term(1.0, f_var(e));
    row.term(-big_m, x_var(e));
    row.end("<=", 0.0);
    row.begin("lb" + std::to_string(e));
    row.term(1.0, f_var(e));
    row.term(big_m, x_var(e));
    row.end(">=", 0.0);
  }

  out << "Bounds\n";
  for (EdgeId e = 0; e < m; ++e) out << ' ' << f_var(e) << " free\n";

  out << "Binaries\n";
  for (EdgeId e = 0; e < m; ++e) out << ' ' << x_var(e) << '\n';
  for (EdgeId e = 0; e < m; ++e)
    for (int o = 0; o < 2; ++o)
      for (NodeId u = 0; u < n; ++u)
        if (u != net.edge(e).tail && u != net.edge(e).head) out << ' ' << z_var(e, o, u) << '\n';
  out << "End\n";
  return out.str();
}

void export_martin_lp(const Network& net, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << martin_lp_text(net);
  if (!file.flush()) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace netreconf
