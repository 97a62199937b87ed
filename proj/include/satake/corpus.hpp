#ifndef SATAKE_CORPUS_HPP
#define SATAKE_CORPUS_HPP

#include <string_view>
#include <vector>

#include "satake/dsl.hpp"

namespace satake {

/// A bundled example index with its expected verdict.
struct CorpusEntry {
  std::string_view file;
  std::string_view text;
};

/// Bundled examples, identical to the files in corpus/.
inline const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"ex1a.sidx", R"sidx(index "ex1a"
node a1 a2 a3
node b1 b2 b3
edge a1 a2
edge a2 a3 4 short=a3
edge b1 b2
edge b2 b3 4 short=b3
aniso r: a3
aniso q: a3 b3
galois: (a1 b1)(a2 b2)(a3 b3)
delta: a2 b3
expect: rational=true route=EqualRankMain
)sidx"},
      {"ex1b.sidx", R"sidx(index "ex1b"
node a1 a2 a3
node b1 b2 b3
edge a1 a2
edge a2 a3 4 short=a3
edge b1 b2
edge b2 b3 4 short=b3
aniso r: a3
aniso q: a3 b3
galois: (a1 b1)(a2 b2)(a3 b3)
delta: a1 b3
expect: rational=false route=ExceptionalQRank2
)sidx"},
      {"dim1-a.sidx", R"sidx(index "dim1-a"
node a1 a2
node b1 b2
edge a1 a2 4 short=a2
edge b1 b2 4 short=b2
aniso r:
aniso q:
galois: (a1 b1)(a2 b2)
delta: a1 a2 b2
expect: rational=false route=ExceptionalQRank2
)sidx"},
      {"dim1-b.sidx", R"sidx(index "dim1-b"
node a1 a2
node b1 b2
edge a1 a2 4 short=a2
edge b1 b2 4 short=b2
aniso r:
aniso q:
galois: (a1 b1)(a2 b2)
delta: a1 b1
expect: rational=true route=DeltaGaloisInvariant
)sidx"},
      {"dim1-c.sidx", R"sidx(index "dim1-c"
node a1 a2
node b1 b2
edge a1 a2 4 short=a2
edge b1 b2 4 short=b2
aniso r:
aniso q:
galois: (a1 b1)(a2 b2)
delta: a1 a2 b1 b2
expect: rational=true route=DeltaGaloisInvariant
)sidx"},
      {"ex2a.sidx", R"sidx(index "ex2a"
node a1 a2
node b1 b2
edge a1 a2 4 short=a2
edge b1 b2 4 short=b2
aniso r:
aniso q: a2 b2
galois: (a1 b1)(a2 b2)
delta: a1 a2 b2
expect: rational=true route=ExceptionalQRank1
)sidx"},
      {"ex2b.sidx", R"sidx(index "ex2b"
node a1 a2
node b1 b2
edge a1 a2 4 short=a2
edge b1 b2 4 short=b2
aniso r:
aniso q: a2 b2
galois: (a1 b1)(a2 b2)
delta: a1 b1
expect: rational=true route=DeltaGaloisInvariant
)sidx"},
      {"ex2c.sidx", R"sidx(index "ex2c"
node a1 a2
node b1 b2
edge a1 a2 4 short=a2
edge b1 b2 4 short=b2
aniso r:
aniso q: a2 b2
galois: (a1 b1)(a2 b2)
delta: a1 a2 b1
expect: rational=false route=ExceptionalQRank1
)sidx"},
      {"ex3-quadratic-1.sidx", R"sidx(index "ex3-quadratic-1"
node a1 a2 a3
node b1 b2 b3
edge a1 a2
edge a2 a3 4 short=a3
edge b1 b2
edge b2 b3 4 short=b3
aniso r: a3 b2 b3
aniso q: a2 a3 b2 b3
galois: (a1 b1)(a2 b2)(a3 b3)
delta: a1 a2 b1
expect: rational=true route=ExceptionalQRank1
)sidx"},
      {"ex3-quadratic-2.sidx", R"sidx(index "ex3-quadratic-2"
node a1 a2 a3
node b1 b2 b3
edge a1 a2
edge a2 a3 4 short=a3
edge b1 b2
edge b2 b3 4 short=b3
aniso r: a3 b2 b3
aniso q: a2 a3 b2 b3
galois: (a1 b1)(a2 b2)(a3 b3)
delta: a1 b1
expect: rational=true route=DeltaGaloisInvariant
)sidx"},
      {"ex3-cubic-1.sidx", R"sidx(index "ex3-cubic-1"
node a1 a2 a3
node b1 b2 b3
node c1 c2 c3
edge a1 a2
edge a2 a3 4 short=a3
edge b1 b2
edge b2 b3 4 short=b3
edge c1 c2
edge c2 c3 4 short=c3
aniso r: a3 b2 b3
aniso q: a2 a3 b2 b3 c2 c3
galois: (a1 b1 c1)(a2 b2 c2)(a3 b3 c3)
delta: a1 a2 b1 c3
expect: rational=true route=ExceptionalQRank1
)sidx"},
      {"ex3-cubic-2.sidx", R"sidx(index "ex3-cubic-2"
node a1 a2 a3
node b1 b2 b3
node c1 c2 c3
edge a1 a2
edge a2 a3 4 short=a3
edge b1 b2
edge b2 b3 4 short=b3
edge c1 c2
edge c2 c3 4 short=c3
aniso r: a3 b2 b3
aniso q: a2 a3 b2 b3 c2 c3
galois: (a1 b1 c1)(a2 b2 c2)(a3 b3 c3)
delta: a1 b1 c3
expect: rational=false route=ExceptionalQRank1
)sidx"},
  };
  return entries;
}

inline std::vector<IndexDocument> corpus() {
  std::vector<IndexDocument> out;
  for (const CorpusEntry& e : corpus_entries()) out.push_back(parse(e.text));
  return out;
}

}  // namespace satake

#endif  // SATAKE_CORPUS_HPP
