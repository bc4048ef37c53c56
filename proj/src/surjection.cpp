#include "s5kit/surjection.hpp"

#include <algorithm>
#include <string>

#include "s5kit/detail/union_find.hpp"

namespace s5kit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SortMismatch: return "SortMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::SourceMismatch: return "SourceMismatch";
    case ErrorCode::NotOnto: return "NotOnto";
    case ErrorCode::NotIntoOneClass: return "NotIntoOneClass";
    case ErrorCode::NotS5: return "NotS5";
    case ErrorCode::NotEquivalence: return "NotEquivalence";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NoAtomCover: return "NoAtomCover";
    case ErrorCode::AtomClash: return "AtomClash";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::WitnessConflict: return "WitnessConflict";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::NotAModel: return "NotAModel";
    case ErrorCode::NonIntegralOrbit: return "NonIntegralOrbit";
    case ErrorCode::ClusterExceedsTruncation: return "ClusterExceedsTruncation";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

std::size_t SurjectionHash::operator()(const Surjection& q) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(q.dom));
  mix(static_cast<std::uint64_t>(q.cod));
  for (int v : q.map) mix(static_cast<std::uint64_t>(v));
  return static_cast<std::size_t>(h);
}

Surjection make_surjection(std::vector<int> values, int cod) {
  if (values.empty() || cod < 1)
    throw Error(ErrorCode::OutOfRange, "surjection needs dom >= 1 and cod >= 1");
  std::vector<bool> hit(static_cast<std::size_t>(cod), false);
  for (int v : values) {
    if (v < 1 || v > cod)
      throw Error(ErrorCode::OutOfRange,
                  "image value " + std::to_string(v) + " outside 1.." + std::to_string(cod));
    hit[static_cast<std::size_t>(v) - 1] = true;
  }
  for (int v = 1; v <= cod; ++v)
    if (!hit[static_cast<std::size_t>(v) - 1])
      throw Error(ErrorCode::NotSurjective, "value " + std::to_string(v) + " is never attained");
  Surjection q;
  q.dom = static_cast<int>(values.size());
  q.cod = cod;
  q.map = std::move(values);
  return q;
}

Surjection identity_surjection(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i) - 1] = i;
  return make_surjection(std::move(v), n);
}

Permutation make_permutation(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : values) {
    if (v < 1 || v > n)
      throw Error(ErrorCode::OutOfRange,
                  "permutation value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (hit[static_cast<std::size_t>(v) - 1])
      throw Error(ErrorCode::NotSurjective, "value " + std::to_string(v) + " repeats");
    hit[static_cast<std::size_t>(v) - 1] = true;
  }
  Permutation p;
  p.degree = n;
  p.map = std::move(values);
  return p;
}

Permutation identity_permutation(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i) - 1] = i;
  Permutation p;
  p.degree = n;
  p.map = std::move(v);
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.degree = p.degree;
  r.map.assign(static_cast<std::size_t>(p.degree), 0);
  for (int i = 1; i <= p.degree; ++i) r.map[static_cast<std::size_t>(p(i)) - 1] = i;
  return r;
}

Surjection to_surjection(const Permutation& p) {
  Surjection q;
  q.dom = p.degree;
  q.cod = p.degree;
  q.map = p.map;
  return q;
}

Permutation to_permutation(const Surjection& q) {
  if (q.dom != q.cod)
    throw Error(ErrorCode::SortMismatch, "only a bijection converts to a permutation");
  return make_permutation(q.map);
}

Surjection compose(const Surjection& q, const Surjection& p) {
  if (p.cod != q.dom)
    throw Error(ErrorCode::SortMismatch,
                "cannot compose: cod " + std::to_string(p.cod) + " != dom " + std::to_string(q.dom));
  Surjection r;
  r.dom = p.dom;
  r.cod = q.cod;
  r.map.resize(static_cast<std::size_t>(p.dom));
  for (int i = 1; i <= p.dom; ++i) r.map[static_cast<std::size_t>(i) - 1] = q(p(i));
  return r;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree != b.degree)
    throw Error(ErrorCode::SortMismatch, "permutation degrees differ");
  Permutation r;
  r.degree = a.degree;
  r.map.resize(static_cast<std::size_t>(a.degree));
  for (int i = 1; i <= a.degree; ++i) r.map[static_cast<std::size_t>(i) - 1] = a(b(i));
  return r;
}

std::vector<Surjection> enumerate_surjections(int n, int m) {
  std::vector<Surjection> out;
  if (n < 1 || m < 1 || m > n) return out;
  // Lexicographic generation over image arrays, pruning branches that can no
  // longer reach every value of the codomain.
  std::vector<int> acc;
  acc.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  struct Rec {
    int n, m;
    std::vector<int>& acc;
    std::vector<bool>& used;
    std::vector<Surjection>& out;
    int used_count = 0;
    void go(int pos) {
      if (pos == n) {
        if (used_count == m) {
          Surjection q;
          q.dom = n;
          q.cod = m;
          q.map = acc;
          out.push_back(std::move(q));
        }
        return;
      }
      const int remaining = n - pos;
      for (int v = 1; v <= m; ++v) {
        const bool fresh = !used[static_cast<std::size_t>(v) - 1];
        if (m - (used_count + (fresh ? 1 : 0)) > remaining - 1) continue;
        if (fresh) {
          used[static_cast<std::size_t>(v) - 1] = true;
          ++used_count;
        }
        acc.push_back(v);
        go(pos + 1);
        acc.pop_back();
        if (fresh) {
          used[static_cast<std::size_t>(v) - 1] = false;
          --used_count;
        }
      }
    }
  } rec{n, m, acc, used, out};
  rec.go(0);
  return out;
}

std::vector<Permutation> enumerate_permutations(int n, int cap) {
  if (n > cap)
    throw Error(ErrorCode::CapExceeded,
                "degree " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  std::vector<Permutation> out;
  if (n < 0) return out;
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i) - 1] = i;
  do {
    Permutation p;
    p.degree = n;
    p.map = v;
    out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Surjection coequalizer_surj(const Surjection& f, const Surjection& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw Error(ErrorCode::NotParallel, "coequalizer needs a parallel pair");
  const int n = f.cod;
  detail::UnionFind uf(n);
  for (int i = 1; i <= f.dom; ++i) uf.unite(f(i) - 1, g(i) - 1);
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  int next = 0;
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    if (label[static_cast<std::size_t>(root)] == 0) label[static_cast<std::size_t>(root)] = ++next;
    q[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(root)];
  }
  return make_surjection(std::move(q), next);
}

SurjectionPushout pushout_surj(const Surjection& f, const Surjection& g) {
  if (f.dom != g.dom)
    throw Error(ErrorCode::SourceMismatch, "pushout legs must share their domain");
  const int n = f.cod;
  const int m = g.cod;
  detail::UnionFind uf(n + m);
  for (int i = 1; i <= f.dom; ++i) uf.unite(f(i) - 1, n + g(i) - 1);
  std::vector<int> label(static_cast<std::size_t>(n + m), 0);
  int next = 0;
  std::vector<int> all(static_cast<std::size_t>(n + m));
  for (int i = 0; i < n + m; ++i) {
    const int root = uf.find(i);
    if (label[static_cast<std::size_t>(root)] == 0) label[static_cast<std::size_t>(root)] = ++next;
    all[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(root)];
  }
  SurjectionPushout out;
  out.left = make_surjection(std::vector<int>(all.begin(), all.begin() + n), next);
  out.right = make_surjection(std::vector<int>(all.begin() + n, all.end()), next);
  return out;
}

}  // namespace s5kit
