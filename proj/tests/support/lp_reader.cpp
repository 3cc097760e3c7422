#include "lp_reader.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lp {

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto bs = line.find('\\'); bs != std::string::npos) line.resize(bs);
    std::istringstream words(line);
    std::string w;
    while (words >> w) {
      // Split a trailing colon off row names, and a sign glued to a name.
      if ((w[0] == '-' || w[0] == '+') && w.size() > 1 && std::isalpha(static_cast<unsigned char>(w[1]))) {
        out.push_back(w.substr(0, 1));
        w.erase(0, 1);
      }
      if (w.size() > 1 && w.back() == ':') {
        out.push_back(w.substr(0, w.size() - 1));
        out.push_back(":");
      } else {
        out.push_back(w);
      }
    }
    out.push_back("\n");
  }
  return out;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

bool is_sense(const std::string& s) { return s == "=" || s == "<=" || s == ">=" || s == "<" || s == ">"; }

}  // namespace

Model parse(const std::string& text) {
  const std::vector<std::string> tok = tokens_of(text);
  Model model;
  std::size_t i = 0;
  auto skip_newlines = [&] {
    while (i < tok.size() && tok[i] == "\n") ++i;
  };
  auto expect = [&](const std::string& word) {
    skip_newlines();
    if (i >= tok.size() || tok[i] != word) throw std::runtime_error("expected '" + word + "'");
    ++i;
  };

  expect("Minimize");
  skip_newlines();
  if (i + 1 < tok.size() && tok[i + 1] == ":") i += 2;
  skip_newlines();
  if (tok[i] == "[") {
    ++i;
    double sign = 1.0;
    while (i < tok.size() && tok[i] != "]") {
      const std::string& t = tok[i];
      if (t == "\n") { ++i; continue; }
      if (t == "+") { sign = 1.0; ++i; continue; }
      if (t == "-") { sign = -1.0; ++i; continue; }
      double coef = 1.0;
      if (is_number(t)) {
        coef = std::stod(t);
        ++i;
        while (tok[i] == "\n") ++i;
      }
      const std::string var = tok[i++];
      if (tok[i] != "^2") throw std::runtime_error("only squared terms are supported in the objective");
      ++i;
      model.quadratic[var] += sign * coef;
      model.variables.insert(var);
      sign = 1.0;
    }
    ++i;
    if (tok[i] != "/" || tok[i + 1] != "2") throw std::runtime_error("quadratic part must be divided by 2");
    i += 2;
    for (auto& [v, c] : model.quadratic) c /= 2.0;
  }

  expect("Subject");
  expect("To");
  skip_newlines();
  while (i < tok.size() && tok[i] != "Bounds" && tok[i] != "Binaries" && tok[i] != "End") {
    Row row;
    if (i + 1 < tok.size() && tok[i + 1] == ":") {
      row.name = tok[i];
      i += 2;
    }
    double sign = 1.0;
    double pending = 1.0;
    bool have_coef = false;
    while (true) {
      if (i >= tok.size()) throw std::runtime_error("unterminated row");
      const std::string& t = tok[i];
      if (t == "\n") { ++i; continue; }
      if (is_sense(t)) {
        row.sense = t;
        ++i;
        if (t == "<") row.sense = "<=";
        if (t == ">") row.sense = ">=";
        row.rhs = std::stod(tok[i++]);
        break;
      }
      if (t == "+") { sign = 1.0; ++i; continue; }
      if (t == "-") { sign = -1.0; ++i; continue; }
      if (is_number(t)) {
        pending = std::stod(t);
        have_coef = true;
        ++i;
        continue;
      }
      row.coefficients[t] += sign * (have_coef ? pending : 1.0);
      model.variables.insert(t);
      sign = 1.0;
      have_coef = false;
      ++i;
    }
    model.rows.push_back(std::move(row));
    skip_newlines();
  }

  skip_newlines();
  if (i < tok.size() && tok[i] == "Bounds") {
    ++i;
    skip_newlines();
    while (i < tok.size() && tok[i] != "Binaries" && tok[i] != "End") {
      const std::string var = tok[i++];
      if (tok[i] != "free") throw std::runtime_error("only 'free' bounds are supported");
      ++i;
      model.free_vars.insert(var);
      model.variables.insert(var);
      skip_newlines();
    }
  }
  if (i < tok.size() && tok[i] == "Binaries") {
    ++i;
    skip_newlines();
    while (i < tok.size() && tok[i] != "End") {
      model.binaries.insert(tok[i]);
      model.variables.insert(tok[i]);
      ++i;
      skip_newlines();
    }
  }
  expect("End");
  return model;
}

}  // namespace lp
