#ifndef SKEW_IO_HPP
#define SKEW_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "skew/algebra.hpp"
#include "skew/search.hpp"

namespace skew {

struct ParseError : SkewError {
  ParseError(const std::string& what, int line);
  int line;
};

struct NamedAlgebra {
  Algebra algebra;
  std::map<int, std::string> names;  // optional element labels

  std::string label(int x) const {
    auto it = names.find(x);
    return it != names.end() ? it->second : std::to_string(x);
  }
};

// .skw: line 1 `skw 1`, line 2 n, n meet rows, blank line, n join rows,
// optional `names:` section with `index name` lines; `#` starts a comment.
NamedAlgebra read_skw(std::istream& in);
NamedAlgebra read_skw_file(const std::string& path);
void write_skw(std::ostream& out, const NamedAlgebra& a);
void write_skw_file(const std::string& path, const NamedAlgebra& a);

// Catalog: `# query: ...` header, records separated by `---` lines.
void write_catalog(std::ostream& out, const Catalog& cat);
Catalog read_catalog(std::istream& in);

// Covering edges of the natural partial order as solid edges plus dashed
// intra-D-class edges; edge lists sorted.
std::string to_dot(const NamedAlgebra& a);

}  // namespace skew

#endif
