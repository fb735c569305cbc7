#include "pfcy/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pfcy {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Header {
  PrimeField field;
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::degrevlex();
};

// ring <v1,v2,...> over <field> [order <name>]
Header parse_header(const std::string& line) {
  std::istringstream ss(line);
  std::string word, vars, field;
  ss >> word >> vars;
  if (word != "ring" || vars.empty()) throw ParseError("expected 'ring <variables> over <field>', got \"" + line + "\"");
  ss >> word >> field;
  if (word != "over" || field.empty()) throw ParseError("expected 'over <field>' in \"" + line + "\"");
  Header h;
  h.field = CoefficientField::parse(field).prime_field();
  std::stringstream vs(vars);
  for (std::string v; std::getline(vs, v, ',');) {
    if (v.empty()) throw ParseError("empty variable name in \"" + line + "\"");
    h.variables.push_back(v);
  }
  if (h.variables.size() > static_cast<std::size_t>(kMaxVars))
    throw ParseError("too many variables (at most " + std::to_string(kMaxVars) + ")");
  if (ss >> word) {
    std::string name;
    if (word != "order" || !(ss >> name)) throw ParseError("expected 'order <name>' in \"" + line + "\"");
    h.order = MonomialOrder::parse(name);
  }
  return h;
}

// Next line that is neither blank nor a comment; comments are collected.
bool next_line(std::istream& in, std::string& line, std::vector<std::string>* comments = nullptr) {
  std::string raw;
  while (std::getline(in, raw)) {
    line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (comments) comments->push_back(trim(line.substr(1)));
      continue;
    }
    return true;
  }
  return false;
}

std::string header_line(const PrimeField& F, const std::vector<std::string>& vars, const MonomialOrder& order) {
  std::string s = "ring ";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
  return s + " over " + F.name() + " order " + order.name();
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return in;
}

}  // namespace

GradedIdeal IdealFile::ideal() const {
  return GradedIdeal(field, static_cast<int>(variables.size()), generators, order);
}

IdealFile parse_ideal(std::istream& in) {
  IdealFile f;
  std::string line;
  if (!next_line(in, line, &f.comments)) throw ParseError("empty ideal file");
  Header h = parse_header(line);
  f.field = h.field;
  f.variables = h.variables;
  f.order = h.order;
  const int n = static_cast<int>(f.variables.size());
  while (next_line(in, line, &f.comments)) {
    Polynomial p = parse_polynomial(line, f.field, n, f.order, f.variables);
    if (!p.is_homogeneous()) throw ParseError("generator is not homogeneous: " + line);
    f.generators.push_back(std::move(p));
  }
  return f;
}

IdealFile read_ideal_file(const std::string& path) {
  auto in = open(path);
  return parse_ideal(in);
}

void write_ideal(std::ostream& out, const IdealFile& f) {
  for (const auto& c : f.comments) out << "# " << c << '\n';
  out << header_line(f.field, f.variables, f.order) << '\n';
  for (const auto& g : f.generators) out << g.to_string(f.variables) << '\n';
}

IdealFile ideal_file_of(const GradedIdeal& I, std::vector<std::string> comments) {
  return {I.field(), default_variable_names(I.nvars()), I.order(), I.generators(), std::move(comments)};
}

MatrixFile parse_matrix(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("empty matrix file");
  Header h = parse_header(line);
  const int n = static_cast<int>(h.variables.size());
  if (!next_line(in, line)) throw ParseError("missing 'size N' line");
  std::istringstream ss(line);
  std::string word;
  int size = -1;
  if (!(ss >> word >> size) || word != "size" || size < 0) throw ParseError("expected 'size N', got \"" + line + "\"");
  MatrixFile f{h.field, h.variables, SkewPolyMatrix(h.field, n, size)};
  while (next_line(in, line)) {
    std::istringstream es(line);
    int i = -1, j = -1;
    if (!(es >> i >> j)) throw ParseError("expected 'i j <polynomial>', got \"" + line + "\"");
    if (i < 0 || j < 0 || i >= size || j >= size || i == j) throw ParseError("entry index out of range: " + line);
    std::string rest;
    std::getline(es, rest);
    Polynomial p = parse_polynomial(trim(rest), h.field, n, MonomialOrder::degrevlex(), h.variables);
    if (i < j) f.matrix.set(i, j, p);
    else f.matrix.set(j, i, -p);
  }
  return f;
}

MatrixFile read_matrix_file(const std::string& path) {
  auto in = open(path);
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const SkewPolyMatrix& M) {
  const auto names = default_variable_names(M.nvars());
  out << header_line(M.field(), names, MonomialOrder::degrevlex()) << '\n';
  out << "size " << M.size() << '\n';
  for (int i = 0; i < M.size(); ++i)
    for (int j = i + 1; j < M.size(); ++j) {
      const Polynomial e = M.entry(i, j);
      if (!e.is_zero()) out << i << ' ' << j << ' ' << e.to_string(names) << '\n';
    }
}

}  // namespace pfcy
