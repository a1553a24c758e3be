#include "skew/io.hpp"

#include <fstream>
#include <sstream>

#include "skew/green.hpp"
#include "skew/identities.hpp"

namespace skew {

ParseError::ParseError(const std::string& what, int line_)
    : SkewError(what + " (line " + std::to_string(line_) + ")"),
      line(line_) {}

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next line with comments stripped; skips blank-after-strip lines when
  // skip_blank is set.
  bool next(std::string& out, bool skip_blank = true) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      size_t end = raw.find_last_not_of(" \t\r");
      raw = end == std::string::npos ? "" : raw.substr(0, end + 1);
      if (!raw.empty() || !skip_blank) {
        out = raw;
        return true;
      }
    }
    return false;
  }
};

std::vector<int> parse_row(const std::string& line, int n, int line_no) {
  std::istringstream ss(line);
  std::vector<int> row;
  int v;
  while (ss >> v) {
    if (v < 0 || v >= n) throw ParseError("table entry out of range", line_no);
    row.push_back(v);
  }
  std::string rest;
  if (ss >> rest) throw ParseError("bad table entry", line_no);
  if (static_cast<int>(row.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " entries", line_no);
  return row;
}

NamedAlgebra read_skw_impl(LineReader& r) {
  std::string line;
  if (!r.next(line)) throw ParseError("missing header", r.line_no);
  if (line != "skw 1") throw ParseError("expected 'skw 1'", r.line_no);
  if (!r.next(line)) throw ParseError("missing carrier size", r.line_no);
  int n;
  try {
    size_t pos;
    n = std::stoi(line, &pos);
    if (pos != line.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("bad carrier size", r.line_no);
  }
  if (n < 1) throw ParseError("carrier size must be positive", r.line_no);
  std::vector<int> mt, jt;
  for (int i = 0; i < n; ++i) {
    if (!r.next(line)) throw ParseError("missing meet row", r.line_no);
    auto row = parse_row(line, n, r.line_no);
    mt.insert(mt.end(), row.begin(), row.end());
  }
  for (int i = 0; i < n; ++i) {
    if (!r.next(line)) throw ParseError("missing join row", r.line_no);
    auto row = parse_row(line, n, r.line_no);
    jt.insert(jt.end(), row.begin(), row.end());
  }
  NamedAlgebra out{Algebra(n, std::move(mt), std::move(jt)), {}};
  // optional names section
  std::streampos mark = r.in.tellg();
  int mark_line = r.line_no;
  if (r.next(line)) {
    if (line == "names:") {
      while (r.next(line)) {
        if (line == "---") break;  // catalog separator, not ours
        std::istringstream ss(line);
        int idx;
        std::string name;
        if (!(ss >> idx >> name) || idx < 0 || idx >= n)
          throw ParseError("bad name entry", r.line_no);
        out.names[idx] = name;
      }
    } else {
      // not ours; rewind for catalog reading
      r.in.clear();
      r.in.seekg(mark);
      r.line_no = mark_line;
    }
  }
  return out;
}

}  // namespace

NamedAlgebra read_skw(std::istream& in) {
  LineReader r{in};
  return read_skw_impl(r);
}

NamedAlgebra read_skw_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SkewError("cannot open " + path);
  return read_skw(in);
}

void write_skw(std::ostream& out, const NamedAlgebra& a) {
  int n = a.algebra.size();
  out << "skw 1\n" << n << "\n";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      out << (y ? " " : "") << a.algebra.meet(x, y);
    out << "\n";
  }
  out << "\n";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      out << (y ? " " : "") << a.algebra.join(x, y);
    out << "\n";
  }
  if (!a.names.empty()) {
    out << "names:\n";
    for (const auto& [idx, name] : a.names) out << idx << " " << name << "\n";
  }
}

void write_skw_file(const std::string& path, const NamedAlgebra& a) {
  std::ofstream out(path);
  if (!out) throw SkewError("cannot open " + path + " for writing");
  write_skw(out, a);
}

void write_catalog(std::ostream& out, const Catalog& cat) {
  out << "# query: " << cat.provenance << "\n";
  for (size_t i = 0; i < cat.entries.size(); ++i) {
    if (i) out << "---\n";
    write_skw(out, {cat.entries[i], {}});
  }
}

Catalog read_catalog(std::istream& in) {
  Catalog cat;
  std::string first;
  // provenance comment is stripped by the reader, so peek at the raw line
  std::streampos start = in.tellg();
  if (std::getline(in, first)) {
    const std::string tag = "# query: ";
    if (first.rfind(tag, 0) == 0) cat.provenance = first.substr(tag.size());
    else {
      in.clear();
      in.seekg(start);
    }
  }
  LineReader r{in};
  while (in && in.peek() != EOF) {
    cat.entries.push_back(read_skw_impl(r).algebra);
    std::string line;
    if (!r.next(line)) break;
    if (line != "---") throw ParseError("expected '---' separator", r.line_no);
  }
  return cat;
}

std::string to_dot(const NamedAlgebra& a) {
  const Algebra& alg = a.algebra;
  int n = alg.size();
  OrderStructure ord = natural_order(alg);
  Partition d = green(alg, GreenRel::D);

  std::ostringstream out;
  out << "graph skew {\n";
  for (int x = 0; x < n; ++x) out << "  \"" << a.label(x) << "\";\n";
  // covering edges: x < y with nothing strictly between
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !ord.le(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != x && z != y && ord.le(x, z) && ord.le(z, y)) cover = false;
      if (cover)
        out << "  \"" << a.label(x) << "\" -- \"" << a.label(y) << "\";\n";
    }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (d.same_block(x, y))
        out << "  \"" << a.label(x) << "\" -- \"" << a.label(y)
            << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace skew
