#include "s5kit/theory.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "s5kit/error.hpp"

namespace s5kit {

namespace {

long long factorial(int m) {
  long long out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

void require_sort(const Structure& M, int sort) {
  if (sort < 1 || sort > M.N)
    throw Error(ErrorCode::LevelMismatch,
                "sort " + std::to_string(sort) + " is outside 1.." + std::to_string(M.N));
}

void require_element(const Structure& M, int sort, int element) {
  if (element < 1 || element > M.carrier_size(sort))
    throw Error(ErrorCode::OutOfRange, "element " + std::to_string(element) +
                                           " is outside the sort-" + std::to_string(sort) +
                                           " carrier");
}

// Checked table application: the element must belong to the carrier the
// symbol consumes, and the symbol must live below the truncation.
int at(const Structure& M, const Surjection& q, int element) {
  if (q.dom > M.N || q.cod > M.N)
    throw Error(ErrorCode::LevelMismatch, "surjection symbol exceeds the truncation");
  require_element(M, q.cod, element);
  return M.map_at(q, element);
}

std::string scope_of(const Structure& M) {
  return "quantifiers restricted to sorts 1.." + std::to_string(M.N);
}

// Fix-trivial flags and element lists for every sort, computed from the
// stored bijection tables.
struct FixData {
  std::vector<std::vector<bool>> flag;  // [sort][element-1]
  std::vector<std::vector<int>> list;   // [sort], ascending
};

FixData fix_data(const Structure& M, int cap) {
  FixData fd;
  fd.flag.resize(static_cast<std::size_t>(M.N) + 1);
  fd.list.resize(static_cast<std::size_t>(M.N) + 1);
  for (int n = 1; n <= M.N; ++n) {
    const int size = M.carrier_size(n);
    std::vector<bool> keep(static_cast<std::size_t>(size), true);
    const auto perms = enumerate_permutations(n, cap);
    for (std::size_t p = 1; p < perms.size(); ++p) {  // lex order puts the identity first
      const auto& tab = M.table(to_surjection(perms[p]));
      for (int x = 1; x <= size; ++x)
        if (tab[static_cast<std::size_t>(x) - 1] == x) keep[static_cast<std::size_t>(x) - 1] = false;
    }
    for (int x = 1; x <= size; ++x)
      if (keep[static_cast<std::size_t>(x) - 1]) fd.list[static_cast<std::size_t>(n)].push_back(x);
    fd.flag[static_cast<std::size_t>(n)] = std::move(keep);
  }
  return fd;
}

// buckets[n][z-1] lists every pair (f: n ->> m, y) with M(f)(y) = z, ordered
// by presenting sort, then symbol, then element.  `all_elements` widens y
// from the fix-trivial part to the whole carrier.
using Buckets = std::vector<std::vector<std::vector<PresentingWitness>>>;

Buckets witness_buckets(const Structure& M, const FixData& fd, bool all_elements) {
  Buckets buckets(static_cast<std::size_t>(M.N) + 1);
  for (int n = 1; n <= M.N; ++n) {
    buckets[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(M.carrier_size(n)));
    for (int m = 1; m <= n; ++m) {
      std::vector<int> pool;
      if (all_elements) {
        pool.resize(static_cast<std::size_t>(M.carrier_size(m)));
        for (int y = 1; y <= M.carrier_size(m); ++y) pool[static_cast<std::size_t>(y) - 1] = y;
      } else {
        pool = fd.list[static_cast<std::size_t>(m)];
      }
      if (pool.empty()) continue;
      for (const auto& f : enumerate_surjections(n, m)) {
        const auto& tab = M.table(f);
        for (int y : pool)
          buckets[static_cast<std::size_t>(n)][static_cast<std::size_t>(tab[static_cast<std::size_t>(y) - 1]) - 1]
              .push_back({f, y});
      }
    }
  }
  return buckets;
}

// The bijection sigma with sigma o f == g, when one exists: its values are
// forced fibrewise, so it is unique.
std::optional<Surjection> forced_intertwiner(const Surjection& f, const Surjection& g) {
  if (f.dom != g.dom || f.cod != g.cod) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(f.cod), 0);
  for (int i = 1; i <= f.dom; ++i) {
    int& slot = map[static_cast<std::size_t>(f(i)) - 1];
    if (slot != 0 && slot != g(i)) return std::nullopt;
    slot = g(i);
  }
  // f is onto, so every slot is filled; equal finite fibres make the forced
  // map onto as well, hence bijective.
  return make_surjection(map, g.cod);
}

AxiomVerdict functoriality_verdict(const Structure& M) {
  AxiomVerdict v{"functoriality", true, {}, std::nullopt};
  const auto laws = presheaf_laws(M);
  if (!laws.identity_failures.empty()) {
    const auto& fail = laws.identity_failures.front();
    v.pass = false;
    v.counterexample = AxiomInstance{{fail.level},
                                     {fail.element},
                                     {to_surjection(identity_permutation(fail.level))},
                                     "the identity symbol moves the element"};
  } else if (!laws.composition_failures.empty()) {
    const auto& fail = laws.composition_failures.front();
    v.pass = false;
    v.counterexample = AxiomInstance{{fail.outer.dom, fail.outer.cod},
                                     {fail.element},
                                     {fail.outer, fail.inner},
                                     "tables disagree along a composite"};
  }
  return v;
}

}  // namespace

bool AxiomReport::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.pass; });
}

const AxiomVerdict* AxiomReport::find(const std::string& axiom) const {
  for (const auto& v : verdicts)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

bool check_fix_trivial(const Structure& M, int sort, int element, int cap) {
  require_sort(M, sort);
  require_element(M, sort, element);
  const auto perms = enumerate_permutations(sort, cap);
  for (std::size_t p = 1; p < perms.size(); ++p)
    if (M.map_at(to_surjection(perms[p]), element) == element) return false;
  return true;
}

std::vector<int> fix_trivial_sort_elements(const Structure& M, int sort, int cap) {
  require_sort(M, sort);
  std::vector<int> out;
  const int size = M.carrier_size(sort);
  std::vector<bool> keep(static_cast<std::size_t>(size), true);
  const auto perms = enumerate_permutations(sort, cap);
  for (std::size_t p = 1; p < perms.size(); ++p) {
    const auto& tab = M.table(to_surjection(perms[p]));
    for (int x = 1; x <= size; ++x)
      if (tab[static_cast<std::size_t>(x) - 1] == x) keep[static_cast<std::size_t>(x) - 1] = false;
  }
  for (int x = 1; x <= size; ++x)
    if (keep[static_cast<std::size_t>(x) - 1]) out.push_back(x);
  return out;
}

std::vector<PresentingWitness> presenting_witnesses(const Structure& M, int sort, int element,
                                                    int cap) {
  require_sort(M, sort);
  require_element(M, sort, element);
  std::vector<PresentingWitness> out;
  for (int m = 1; m <= sort; ++m) {
    const auto fix = fix_trivial_sort_elements(M, m, cap);
    if (fix.empty()) continue;
    for (const auto& f : enumerate_surjections(sort, m)) {
      const auto& tab = M.table(f);
      for (int y : fix)
        if (tab[static_cast<std::size_t>(y) - 1] == element) out.push_back({f, y});
    }
  }
  return out;
}

AxiomReport check_T1(const Structure& M, int cap) {
  AxiomReport report;
  report.scope = scope_of(M);
  report.verdicts.push_back(functoriality_verdict(M));

  const FixData fd = fix_data(M, cap);
  const Buckets buckets = witness_buckets(M, fd, false);

  AxiomVerdict cover{"faithful-cover", true, {}, std::nullopt};
  for (int n = 1; n <= M.N && cover.pass; ++n)
    for (int z = 1; z <= M.carrier_size(n) && cover.pass; ++z)
      if (buckets[static_cast<std::size_t>(n)][static_cast<std::size_t>(z) - 1].empty()) {
        cover.pass = false;
        cover.counterexample =
            AxiomInstance{{n}, {z}, {}, "no fix-trivial presentation reaches the element"};
      }
  report.verdicts.push_back(std::move(cover));

  AxiomVerdict collision{"collision-witness", true, {}, std::nullopt};
  for (int n = 1; n <= M.N && collision.pass; ++n)
    for (int z = 1; z <= M.carrier_size(n) && collision.pass; ++z) {
      const auto& bucket = buckets[static_cast<std::size_t>(n)][static_cast<std::size_t>(z) - 1];
      for (const auto& w1 : bucket) {
        for (const auto& w2 : bucket) {
          const auto sigma = forced_intertwiner(w1.f, w2.f);
          if (sigma && M.map_at(*sigma, w2.y) == w1.y) continue;
          collision.pass = false;
          collision.counterexample =
              AxiomInstance{{w1.f.cod, w2.f.cod},
                            {w1.y, w2.y},
                            {w1.f, w2.f},
                            "equal images admit no linking bijection"};
          break;
        }
        if (!collision.pass) break;
      }
    }
  report.verdicts.push_back(std::move(collision));

  AxiomVerdict inj{"injectivity", true, {}, std::nullopt};
  for (int k = 1; k <= M.N && inj.pass; ++k)
    for (int m = 1; m <= k && inj.pass; ++m)
      for (const auto& f : enumerate_surjections(k, m)) {
        const auto& tab = M.table(f);
        std::vector<int> seen(static_cast<std::size_t>(M.carrier_size(k)) + 1, 0);
        for (int x = 1; x <= M.carrier_size(m); ++x) {
          const int v = tab[static_cast<std::size_t>(x) - 1];
          if (seen[static_cast<std::size_t>(v)] != 0) {
            inj.pass = false;
            inj.counterexample = AxiomInstance{
                {m}, {seen[static_cast<std::size_t>(v)], x}, {f}, "the symbol identifies two elements"};
            break;
          }
          seen[static_cast<std::size_t>(v)] = x;
        }
        if (!inj.pass) break;
      }
  report.verdicts.push_back(std::move(inj));

  return report;
}

AxiomReport check_T2(const Structure& M, int cap, bool collision_all_elements) {
  AxiomReport report;
  report.scope = scope_of(M);
  report.verdicts.push_back(functoriality_verdict(M));

  const FixData fd = fix_data(M, cap);
  const Buckets buckets = witness_buckets(M, fd, false);

  AxiomVerdict unique{"unique-presenting-level", true, {}, std::nullopt};
  for (int n = 1; n <= M.N && unique.pass; ++n)
    for (int z = 1; z <= M.carrier_size(n) && unique.pass; ++z) {
      const auto& bucket = buckets[static_cast<std::size_t>(n)][static_cast<std::size_t>(z) - 1];
      if (bucket.empty()) {
        unique.pass = false;
        unique.counterexample = AxiomInstance{{n}, {z}, {}, "no presenting sort"};
        continue;
      }
      const auto& first = bucket.front();
      for (const auto& w : bucket)
        if (w.f.cod != first.f.cod) {
          unique.pass = false;
          unique.counterexample = AxiomInstance{{n, first.f.cod, w.f.cod},
                                                {z, first.y, w.y},
                                                {first.f, w.f},
                                                "two distinct presenting sorts"};
          break;
        }
    }
  report.verdicts.push_back(std::move(unique));

  AxiomVerdict criterion{"collision-criterion", true, {}, std::nullopt};
  const Buckets wide =
      collision_all_elements ? witness_buckets(M, fd, true) : Buckets{};
  const Buckets& pool = collision_all_elements ? wide : buckets;
  for (int n = 1; n <= M.N && criterion.pass; ++n)
    for (int z = 1; z <= M.carrier_size(n) && criterion.pass; ++z) {
      const auto& bucket = pool[static_cast<std::size_t>(n)][static_cast<std::size_t>(z) - 1];
      for (const auto& w1 : bucket) {
        for (const auto& w2 : bucket) {
          if (w1.f.cod != w2.f.cod) continue;
          const auto sigma = forced_intertwiner(w2.f, w1.f);
          if (sigma && M.map_at(*sigma, w1.y) == w2.y) continue;
          criterion.pass = false;
          criterion.counterexample = AxiomInstance{{n, w1.f.cod},
                                                   {w1.y, w2.y},
                                                   {w1.f, w2.f},
                                                   "collision without an intertwining bijection"};
          break;
        }
        if (!criterion.pass) break;
      }
    }
  report.verdicts.push_back(std::move(criterion));

  return report;
}

AxiomReport check_lex_preservation(const Structure& M, int cap) {
  (void)cap;
  AxiomReport report;
  report.scope = scope_of(M);
  report.verdicts.push_back(functoriality_verdict(M));

  AxiomVerdict einj{"equalizer-injectivity", true, {}, std::nullopt};
  AxiomVerdict eimg{"equalizer-image", true, {}, std::nullopt};

  // Per distinct coequalizer symbol: the first duplicate pair in its table
  // and the bitmap of its image.
  struct QInfo {
    std::optional<std::pair<int, int>> dup;
    std::vector<bool> image;
  };
  std::map<Surjection, QInfo> qcache;
  const auto q_info = [&](const Surjection& q) -> const QInfo& {
    auto it = qcache.find(q);
    if (it == qcache.end()) {
      QInfo qi;
      qi.image.assign(static_cast<std::size_t>(M.carrier_size(q.dom)) + 1, false);
      std::vector<int> seen(static_cast<std::size_t>(M.carrier_size(q.dom)) + 1, 0);
      const auto& tab = M.table(q);
      for (int z = 1; z <= M.carrier_size(q.cod); ++z) {
        const int v = tab[static_cast<std::size_t>(z) - 1];
        if (!qi.dup && seen[static_cast<std::size_t>(v)] != 0)
          qi.dup = std::make_pair(seen[static_cast<std::size_t>(v)], z);
        seen[static_cast<std::size_t>(v)] = z;
        qi.image[static_cast<std::size_t>(v)] = true;
      }
      it = qcache.emplace(q, std::move(qi)).first;
    }
    return it->second;
  };

  for (int k = 1; k <= M.N && (einj.pass || eimg.pass); ++k)
    for (int n = 1; n <= k && (einj.pass || eimg.pass); ++n) {
      const auto fs = enumerate_surjections(k, n);
      for (std::size_t i = 0; i < fs.size() && (einj.pass || eimg.pass); ++i)
        for (std::size_t j = i; j < fs.size() && (einj.pass || eimg.pass); ++j) {
          const auto& f = fs[i];
          const auto& g = fs[j];
          const Surjection q = coequalizer_surj(f, g);
          const QInfo& info = q_info(q);
          if (einj.pass && info.dup) {
            einj.pass = false;
            einj.counterexample = AxiomInstance{{k, n},
                                                {info.dup->first, info.dup->second},
                                                {f, g},
                                                "the coequalizer symbol identifies two elements"};
          }
          if (eimg.pass)
            for (int x = 1; x <= M.carrier_size(n); ++x) {
              const bool equalized = M.map_at(f, x) == M.map_at(g, x);
              if (equalized == info.image[static_cast<std::size_t>(x)]) continue;
              eimg.pass = false;
              eimg.counterexample =
                  AxiomInstance{{k, n},
                                {x},
                                {f, g},
                                equalized ? "equalized element missed by the coequalizer image"
                                          : "coequalizer image contains a non-equalized element"};
              break;
            }
        }
    }
  report.verdicts.push_back(std::move(einj));
  report.verdicts.push_back(std::move(eimg));

  AxiomVerdict pinj{"pullback-injectivity", true, {}, std::nullopt};
  AxiomVerdict pcov{"pullback-covering", true, {}, std::nullopt};

  for (int k = 1; k <= M.N && (pinj.pass || pcov.pass); ++k) {
    const int Ck = M.carrier_size(k);
    for (int n = 1; n <= k && (pinj.pass || pcov.pass); ++n) {
      const auto fs = enumerate_surjections(k, n);
      const int Cn = M.carrier_size(n);
      for (int m = n; m <= k && (pinj.pass || pcov.pass); ++m) {
        const auto gs = (m == n) ? fs : enumerate_surjections(k, m);
        const int Cm = M.carrier_size(m);

        // Preimage lists of every right leg, shared across the block.
        std::vector<std::vector<std::vector<int>>> gpre(gs.size());
        for (std::size_t gj = 0; gj < gs.size(); ++gj) {
          gpre[gj].resize(static_cast<std::size_t>(Ck) + 1);
          const auto& tab = M.table(gs[gj]);
          for (int v = 1; v <= Cm; ++v)
            gpre[gj][static_cast<std::size_t>(tab[static_cast<std::size_t>(v) - 1])].push_back(v);
        }

        // Epoch-stamped scratch over pairs (u, v) of the two carriers.
        const std::size_t keys =
            (static_cast<std::size_t>(Cn) + 1) * (static_cast<std::size_t>(Cm) + 1);
        std::vector<int> med_epoch(keys, 0), med_z(keys, 0), cov_epoch(keys, 0);
        int epoch = 0;

        for (std::size_t fi = 0; fi < fs.size() && (pinj.pass || pcov.pass); ++fi) {
          const auto& f = fs[fi];
          std::vector<std::vector<int>> fpre(static_cast<std::size_t>(Ck) + 1);
          const auto& ftab = M.table(f);
          for (int u = 1; u <= Cn; ++u)
            fpre[static_cast<std::size_t>(ftab[static_cast<std::size_t>(u) - 1])].push_back(u);

          for (std::size_t gj = (m == n) ? fi : 0;
               gj < gs.size() && (pinj.pass || pcov.pass); ++gj) {
            const auto& g = gs[gj];
            const SurjectionPushout P = pushout_surj(f, g);
            const auto& ltab = M.table(P.left);
            const auto& rtab = M.table(P.right);
            ++epoch;
            for (int z = 1; z <= M.carrier_size(P.left.cod); ++z) {
              const int u = ltab[static_cast<std::size_t>(z) - 1];
              const int v = rtab[static_cast<std::size_t>(z) - 1];
              const std::size_t key = static_cast<std::size_t>(u) *
                                          (static_cast<std::size_t>(Cm) + 1) +
                                      static_cast<std::size_t>(v);
              if (pinj.pass && med_epoch[key] == epoch) {
                pinj.pass = false;
                pinj.counterexample = AxiomInstance{{n, m},
                                                    {med_z[key], z},
                                                    {f, g},
                                                    "the mediating map identifies two elements"};
              }
              med_epoch[key] = epoch;
              med_z[key] = z;
              cov_epoch[key] = epoch;
            }
            if (!pcov.pass) continue;
            for (int w = 1; w <= Ck && pcov.pass; ++w)
              for (int u : fpre[static_cast<std::size_t>(w)]) {
                for (int v : gpre[gj][static_cast<std::size_t>(w)]) {
                  const std::size_t key = static_cast<std::size_t>(u) *
                                              (static_cast<std::size_t>(Cm) + 1) +
                                          static_cast<std::size_t>(v);
                  if (cov_epoch[key] == epoch) continue;
                  pcov.pass = false;
                  pcov.counterexample =
                      AxiomInstance{{n, m},
                                    {u, v},
                                    {f, g},
                                    "compatible pair not covered by the pushout sort"};
                  break;
                }
                if (!pcov.pass) break;
              }
          }
        }
      }
    }
  }
  report.verdicts.push_back(std::move(pinj));
  report.verdicts.push_back(std::move(pcov));

  return report;
}

bool re_evaluate(const Structure& M, const std::string& axiom, const AxiomInstance& instance,
                 int cap) {
  const auto surj = [&](std::size_t i) -> const Surjection& {
    if (instance.surjections.size() <= i)
      throw Error(ErrorCode::BadInput, "instance carries too few surjections for " + axiom);
    return instance.surjections[i];
  };
  const auto elem = [&](std::size_t i) -> int {
    if (instance.elements.size() <= i)
      throw Error(ErrorCode::BadInput, "instance carries too few elements for " + axiom);
    return instance.elements[i];
  };

  if (axiom == "functoriality") {
    if (instance.surjections.size() == 1) {
      const Surjection& q = surj(0);
      if (!(q.is_bijective() && q == to_surjection(identity_permutation(q.dom))))
        throw Error(ErrorCode::BadInput, "single-symbol functoriality instance must be an identity");
      return at(M, q, elem(0)) == elem(0);
    }
    const Surjection& outer = surj(0);
    const Surjection& inner = surj(1);
    if (inner.cod != outer.dom)
      throw Error(ErrorCode::BadInput, "functoriality instance is not composable");
    const Surjection composite = compose(outer, inner);
    const int z = elem(0);
    return at(M, composite, z) == at(M, inner, at(M, outer, z));
  }
  if (axiom == "faithful-cover") {
    if (instance.sorts.empty())
      throw Error(ErrorCode::BadInput, "faithful-cover instance names no sort");
    return !presenting_witnesses(M, instance.sorts.front(), elem(0), cap).empty();
  }
  if (axiom == "collision-witness") {
    const Surjection& f = surj(0);
    const Surjection& g = surj(1);
    if (f.dom != g.dom) throw Error(ErrorCode::BadInput, "presentation pair has mismatched domains");
    const int x = elem(0);
    const int y = elem(1);
    const bool premise = at(M, f, x) == at(M, g, y) && check_fix_trivial(M, f.cod, x, cap) &&
                         check_fix_trivial(M, g.cod, y, cap);
    if (!premise) return true;
    const auto sigma = forced_intertwiner(f, g);
    return sigma && at(M, *sigma, y) == x;
  }
  if (axiom == "injectivity") {
    const Surjection& f = surj(0);
    const int x = elem(0);
    const int y = elem(1);
    return !(x != y && at(M, f, x) == at(M, f, y));
  }
  if (axiom == "unique-presenting-level") {
    if (instance.sorts.empty())
      throw Error(ErrorCode::BadInput, "unique-presenting-level instance names no sort");
    const auto witnesses = presenting_witnesses(M, instance.sorts.front(), elem(0), cap);
    std::vector<int> sorts;
    for (const auto& w : witnesses) sorts.push_back(w.f.cod);
    std::sort(sorts.begin(), sorts.end());
    sorts.erase(std::unique(sorts.begin(), sorts.end()), sorts.end());
    return sorts.size() == 1;
  }
  if (axiom == "collision-criterion") {
    const Surjection& q1 = surj(0);
    const Surjection& q2 = surj(1);
    if (q1.dom != q2.dom || q1.cod != q2.cod)
      throw Error(ErrorCode::BadInput, "collision pair is not parallel");
    const int x1 = elem(0);
    const int x2 = elem(1);
    if (at(M, q1, x1) != at(M, q2, x2)) return true;
    const auto sigma = forced_intertwiner(q2, q1);
    return sigma && at(M, *sigma, x1) == x2;
  }
  if (axiom == "equalizer-injectivity") {
    const Surjection& f = surj(0);
    const Surjection& g = surj(1);
    const Surjection q = coequalizer_surj(f, g);
    const int z1 = elem(0);
    const int z2 = elem(1);
    return !(z1 != z2 && at(M, q, z1) == at(M, q, z2));
  }
  if (axiom == "equalizer-image") {
    const Surjection& f = surj(0);
    const Surjection& g = surj(1);
    const Surjection q = coequalizer_surj(f, g);
    const int x = elem(0);
    const bool equalized = at(M, f, x) == at(M, g, x);
    bool in_image = false;
    for (int z = 1; z <= M.carrier_size(q.cod) && !in_image; ++z)
      in_image = M.map_at(q, z) == x;
    return equalized == in_image;
  }
  if (axiom == "pullback-injectivity") {
    const SurjectionPushout P = pushout_surj(surj(0), surj(1));
    const int z1 = elem(0);
    const int z2 = elem(1);
    return !(z1 != z2 && at(M, P.left, z1) == at(M, P.left, z2) &&
             at(M, P.right, z1) == at(M, P.right, z2));
  }
  if (axiom == "pullback-covering") {
    const Surjection& f = surj(0);
    const Surjection& g = surj(1);
    const int u = elem(0);
    const int v = elem(1);
    if (at(M, f, u) != at(M, g, v)) return true;
    const SurjectionPushout P = pushout_surj(f, g);
    for (int z = 1; z <= M.carrier_size(P.left.cod); ++z)
      if (M.map_at(P.left, z) == u && M.map_at(P.right, z) == v) return true;
    return false;
  }
  throw Error(ErrorCode::BadInput, "unknown axiom \"" + axiom + "\"");
}

Classification classify_model(const Structure& M, int cap, bool require_model) {
  if (require_model) {
    const AxiomReport rep = check_T2(M, cap);
    for (const auto& v : rep.verdicts)
      if (!v.pass)
        throw Error(ErrorCode::NotAModel, "structure fails " + v.axiom);
  }
  Classification out;
  std::vector<int> sizes;
  for (int m = 1; m <= M.N; ++m) {
    const long long fix =
        static_cast<long long>(fix_trivial_sort_elements(M, m, cap).size());
    const long long fact = factorial(m);
    if (fix % fact != 0)
      throw Error(ErrorCode::NonIntegralOrbit,
                  "sort " + std::to_string(m) + " has a fix-trivial part of size " +
                      std::to_string(fix) + ", not a multiple of " + std::to_string(fact));
    const int count = static_cast<int>(fix / fact);
    if (count > 0) {
      out.cluster_counts[m] = count;
      sizes.insert(sizes.end(), static_cast<std::size_t>(count), m);
    }
  }
  out.frame = from_cluster_family(make_cluster_family(sizes));
  return out;
}

Structure model_from_frame(const ClusterFamily& sizes, int N, int cap) {
  if (N < 1) throw Error(ErrorCode::BadInput, "truncation level must be positive");
  if (N > cap)
    throw Error(ErrorCode::CapExceeded,
                "truncation " + std::to_string(N) + " exceeds cap " + std::to_string(cap));
  std::vector<int> sorted = sizes.sizes;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.back() > N)
    throw Error(ErrorCode::ClusterExceedsTruncation,
                "cluster of size " + std::to_string(sorted.back()) +
                    " cannot present below truncation " + std::to_string(N));
  std::map<int, TruncatedPresheaf> cache;
  std::vector<TruncatedPresheaf> parts;
  for (int s : sorted) {
    auto it = cache.find(s);
    if (it == cache.end())
      it = cache.emplace(s, canonical_lifting(canonical_action(s, cap), N, cap).presheaf).first;
    parts.push_back(it->second);
  }
  return disjoint_union_presheaves(parts, N).presheaf;
}

}  // namespace s5kit
