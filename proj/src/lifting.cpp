#include "s5kit/lifting.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace s5kit {
namespace {

// Adjacent transpositions at the level plus one-point collapses from the
// level above (when it exists). Every surjection between levels factors into
// these, which is what makes the construction-time law check complete.
std::vector<Surjection> elementary_surjections_into(int level, int N) {
  std::vector<Surjection> out;
  for (int i = 1; i < level; ++i) {
    std::vector<int> map(static_cast<std::size_t>(level));
    for (int j = 0; j < level; ++j) map[static_cast<std::size_t>(j)] = j + 1;
    std::swap(map[static_cast<std::size_t>(i) - 1], map[static_cast<std::size_t>(i)]);
    out.push_back(make_surjection(std::move(map), level));
  }
  if (level + 1 <= N)
    for (int i = 1; i <= level; ++i) {
      std::vector<int> map(static_cast<std::size_t>(level) + 1);
      for (int j = 1; j <= level + 1; ++j)
        map[static_cast<std::size_t>(j) - 1] = j <= i ? j : j - 1;
      out.push_back(make_surjection(std::move(map), level));
    }
  return out;
}

Surjection swap_surjection(int level) {
  std::vector<int> map(static_cast<std::size_t>(level));
  for (int j = 0; j < level; ++j) map[static_cast<std::size_t>(j)] = j + 1;
  if (level >= 2) std::swap(map[0], map[1]);
  return make_surjection(std::move(map), level);
}

Surjection cycle_surjection(int level) {
  std::vector<int> map(static_cast<std::size_t>(level));
  for (int j = 0; j < level; ++j) map[static_cast<std::size_t>(j)] = (j + 1) % level + 1;
  return make_surjection(std::move(map), level);
}

void check_presheaf_shape(const TruncatedPresheaf& p) {
  if (p.N < 1) throw Error(ErrorCode::BadInput, "truncation level must be positive");
  if (p.carrier_sizes.size() != static_cast<std::size_t>(p.N))
    throw Error(ErrorCode::BadInput, "carrier list must cover levels 1.." + std::to_string(p.N));
  for (int size : p.carrier_sizes)
    if (size < 0) throw Error(ErrorCode::BadInput, "carrier sizes must be nonnegative");

  std::size_t expected = 0;
  for (int n = 1; n <= p.N; ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& q : enumerate_surjections(n, m)) {
        ++expected;
        const auto it = p.tables.find(q);
        if (it == p.tables.end())
          throw Error(ErrorCode::BadInput, "missing table for a surjection " +
                                               std::to_string(n) + " onto " + std::to_string(m));
        if (it->second.size() != static_cast<std::size_t>(p.carrier_size(m)))
          throw Error(ErrorCode::BadInput, "table length must match the codomain level carrier");
        for (int value : it->second)
          if (value < 1 || value > p.carrier_size(n))
            throw Error(ErrorCode::BadInput, "table value outside the domain level carrier");
      }
  if (p.tables.size() != expected)
    throw Error(ErrorCode::BadInput, "tables must cover exactly the surjections between levels");
}

}  // namespace

const std::vector<int>& TruncatedPresheaf::table(const Surjection& q) const {
  const auto it = tables.find(q);
  if (it == tables.end())
    throw Error(ErrorCode::BadInput, "no table stored for the requested surjection");
  return it->second;
}

TruncatedPresheaf make_presheaf_unchecked(
    int N, std::vector<int> carrier_sizes,
    std::unordered_map<Surjection, std::vector<int>, SurjectionHash> tables) {
  TruncatedPresheaf p{N, std::move(carrier_sizes), std::move(tables)};
  check_presheaf_shape(p);
  return p;
}

TruncatedPresheaf make_presheaf(
    int N, std::vector<int> carrier_sizes,
    std::unordered_map<Surjection, std::vector<int>, SurjectionHash> tables) {
  TruncatedPresheaf p =
      make_presheaf_unchecked(N, std::move(carrier_sizes), std::move(tables));
  const PresheafLawReport report = presheaf_laws(p);
  if (!report.pass()) {
    if (!report.identity_failures.empty())
      throw Error(ErrorCode::NotAModel,
                  "identity table is not the identity at level " +
                      std::to_string(report.identity_failures.front().level));
    throw Error(ErrorCode::NotAModel, "transition tables are not functorial");
  }
  return p;
}

PresheafLawReport presheaf_laws(const TruncatedPresheaf& p, bool exhaustive) {
  PresheafLawReport report;
  for (int n = 1; n <= p.N; ++n) {
    const auto& id_table = p.table(identity_surjection(n));
    for (int z = 1; z <= p.carrier_size(n); ++z)
      if (id_table[static_cast<std::size_t>(z) - 1] != z) {
        report.identity_failures.push_back({n, z});
        break;
      }
  }

  const auto check_pair = [&](const Surjection& outer, const Surjection& inner) {
    const auto& composite = p.table(compose(outer, inner));
    const auto& first = p.table(outer);
    const auto& then = p.table(inner);
    for (int z = 1; z <= p.carrier_size(outer.cod); ++z)
      if (composite[static_cast<std::size_t>(z) - 1] !=
          then[static_cast<std::size_t>(first[static_cast<std::size_t>(z) - 1]) - 1]) {
        report.composition_failures.push_back({outer, inner, z});
        return;
      }
  };

  for (int n = 1; n <= p.N; ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& outer : enumerate_surjections(n, m)) {
        if (exhaustive) {
          for (int k = n; k <= p.N; ++k)
            for (const auto& inner : enumerate_surjections(k, n)) check_pair(outer, inner);
        } else {
          for (const auto& inner : elementary_surjections_into(n, p.N))
            check_pair(outer, inner);
        }
      }
  return report;
}

SymmetricAction level_action(const TruncatedPresheaf& p, int level) {
  if (level < 1 || level > p.N)
    throw Error(ErrorCode::LevelMismatch, "level outside the truncation");
  return make_action(level, p.carrier_size(level), p.table(swap_surjection(level)),
                     p.table(cycle_surjection(level)));
}

LiftClass canonical_pair(const SymmetricAction& a, int x, const Surjection& q, int cap) {
  if (q.cod != a.m)
    throw Error(ErrorCode::DegreeMismatch, "surjection must land on the action's letters");
  std::optional<LiftClass> best;
  for (const auto& sigma : enumerate_permutations(a.m, cap)) {
    LiftClass candidate{apply(a, sigma, x), compose(to_surjection(inverse(sigma)), q)};
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return *best;
}

std::optional<Permutation> equivalent_pairs(const SymmetricAction& a, int x1,
                                            const Surjection& q1, int x2, const Surjection& q2) {
  if (q1.dom != q2.dom || q1.cod != q2.cod)
    throw Error(ErrorCode::SortMismatch, "pairs must share domain and codomain");
  if (q1.cod != a.m)
    throw Error(ErrorCode::DegreeMismatch, "surjections must land on the action's letters");

  std::vector<int> forced(static_cast<std::size_t>(a.m), 0);
  for (int i = 1; i <= q1.dom; ++i) {
    int& slot = forced[static_cast<std::size_t>(q2(i)) - 1];
    if (slot == 0)
      slot = q1(i);
    else if (slot != q1(i))
      return std::nullopt;  // the surjections force conflicting values
  }
  std::vector<bool> seen(static_cast<std::size_t>(a.m), false);
  for (int value : forced) {
    if (value < 1 || seen[static_cast<std::size_t>(value) - 1]) return std::nullopt;
    seen[static_cast<std::size_t>(value) - 1] = true;
  }
  Permutation sigma = make_permutation(std::move(forced));
  if (apply(a, sigma, x1) != x2) return std::nullopt;
  return sigma;
}

int CanonicalLifting::index_of(int level, const LiftClass& rep) const {
  const auto& reps = class_reps[static_cast<std::size_t>(level) - 1];
  const auto it = std::lower_bound(reps.begin(), reps.end(), rep);
  if (it == reps.end() || *it != rep)
    throw Error(ErrorCode::BadInput, "pair is not a stored class representative");
  return static_cast<int>(it - reps.begin()) + 1;
}

CanonicalLifting canonical_lifting(const SymmetricAction& a, int N, int cap) {
  if (N < 1) throw Error(ErrorCode::BadInput, "truncation level must be positive");
  if (N > cap)
    throw Error(ErrorCode::CapExceeded,
                "truncation " + std::to_string(N) + " exceeds cap " + std::to_string(cap));

  CanonicalLifting out;
  out.action = a;
  out.class_reps.assign(static_cast<std::size_t>(N), {});
  for (int n = a.m; n <= N; ++n) {
    std::map<LiftClass, int> classes;
    for (const auto& q : enumerate_surjections(n, a.m))
      for (int x = 1; x <= a.carrier; ++x) classes.emplace(canonical_pair(a, x, q, cap), 0);
    auto& reps = out.class_reps[static_cast<std::size_t>(n) - 1];
    for (const auto& [rep, unused] : classes) reps.push_back(rep);
  }

  std::vector<int> carriers(static_cast<std::size_t>(N), 0);
  for (int n = 1; n <= N; ++n)
    carriers[static_cast<std::size_t>(n) - 1] =
        static_cast<int>(out.class_reps[static_cast<std::size_t>(n) - 1].size());

  std::unordered_map<Surjection, std::vector<int>, SurjectionHash> tables;
  for (int k = 1; k <= N; ++k)
    for (int n = 1; n <= k; ++n)
      for (const auto& p : enumerate_surjections(k, n)) {
        const auto& source_reps = out.class_reps[static_cast<std::size_t>(n) - 1];
        std::vector<int> table;
        table.reserve(source_reps.size());
        for (const auto& rep : source_reps)
          table.push_back(out.index_of(k, canonical_pair(a, rep.x, compose(rep.q, p), cap)));
        tables.emplace(p, std::move(table));
      }
  out.presheaf = make_presheaf(N, std::move(carriers), std::move(tables));

  if (a.m <= N) {
    out.eta.resize(static_cast<std::size_t>(a.carrier));
    for (int x = 1; x <= a.carrier; ++x)
      out.eta[static_cast<std::size_t>(x) - 1] =
          out.index_of(a.m, canonical_pair(a, x, identity_surjection(a.m), cap));
  }
  return out;
}

LiftingReport verify_lifting_conditions(const TruncatedPresheaf& presheaf,
                                        const SymmetricAction& a, const std::vector<int>& eta,
                                        int cap) {
  LiftingReport report;
  const int m = a.m;
  if (m > presheaf.N) {
    report.failures.push_back("eta: presenting level " + std::to_string(m) +
                              " exceeds the truncation");
    return report;
  }

  // (i) eta is an equivariant bijection onto the presenting level.
  bool eta_usable = true;
  if (eta.size() != static_cast<std::size_t>(a.carrier) ||
      a.carrier != presheaf.carrier_size(m)) {
    report.failures.push_back("eta is not a bijection onto level " + std::to_string(m));
    eta_usable = false;
  } else {
    std::vector<bool> hit(static_cast<std::size_t>(a.carrier), false);
    for (int value : eta) {
      if (value < 1 || value > a.carrier || hit[static_cast<std::size_t>(value) - 1]) {
        report.failures.push_back("eta is not a bijection onto level " + std::to_string(m));
        eta_usable = false;
        break;
      }
      hit[static_cast<std::size_t>(value) - 1] = true;
    }
  }
  if (!eta_usable) return report;

  const auto group_tables = tabulate_action(a, cap);
  const auto perms = enumerate_permutations(m, cap);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const Surjection sigma = to_surjection(perms[i]);
    bool broken = false;
    for (int x = 1; x <= a.carrier; ++x)
      if (eta[static_cast<std::size_t>(
              group_tables[i][static_cast<std::size_t>(x) - 1]) - 1] !=
          presheaf.map_at(sigma, eta[static_cast<std::size_t>(x) - 1])) {
        report.failures.push_back("eta is not equivariant at element " + std::to_string(x));
        broken = true;
        break;
      }
    if (broken) break;
  }

  // (ii) every element is reached from the presenting level.
  for (int n = 1; n <= presheaf.N; ++n) {
    std::vector<bool> covered(static_cast<std::size_t>(presheaf.carrier_size(n)), false);
    if (n >= m)
      for (const auto& q : enumerate_surjections(n, m))
        for (int x = 1; x <= a.carrier; ++x)
          covered[static_cast<std::size_t>(
              presheaf.map_at(q, eta[static_cast<std::size_t>(x) - 1])) - 1] = true;
    for (int z = 1; z <= presheaf.carrier_size(n); ++z)
      if (!covered[static_cast<std::size_t>(z) - 1]) {
        report.failures.push_back("level " + std::to_string(n) + " element " +
                                  std::to_string(z) + " is not reached from level " +
                                  std::to_string(m));
        break;
      }
  }

  // (iii) reaches collide exactly when a group element moves one presentation
  // onto the other.
  for (int n = m; n <= presheaf.N; ++n) {
    const auto surjections = enumerate_surjections(n, m);
    bool broken = false;
    for (const auto& q1 : surjections) {
      for (const auto& q2 : surjections) {
        for (int x1 = 1; x1 <= a.carrier && !broken; ++x1)
          for (int x2 = 1; x2 <= a.carrier && !broken; ++x2) {
            const bool same_element =
                presheaf.map_at(q1, eta[static_cast<std::size_t>(x1) - 1]) ==
                presheaf.map_at(q2, eta[static_cast<std::size_t>(x2) - 1]);
            const bool witnessed = equivalent_pairs(a, x1, q1, x2, q2).has_value();
            if (same_element != witnessed) {
              report.failures.push_back(
                  "collision criterion fails at level " + std::to_string(n) +
                  (same_element ? ": equal without witness" : ": witness without equality"));
              broken = true;
            }
          }
        if (broken) break;
      }
      if (broken) break;
    }
  }
  return report;
}

bool is_natural(const TruncatedPresheaf& source, const TruncatedPresheaf& target,
                const NatTransformation& xi) {
  if (source.N != target.N)
    throw Error(ErrorCode::LevelMismatch, "presheaves truncate at different levels");
  if (xi.components.size() != static_cast<std::size_t>(source.N))
    throw Error(ErrorCode::BadInput, "transformation must have one component per level");
  for (int n = 1; n <= source.N; ++n) {
    const auto& comp = xi.components[static_cast<std::size_t>(n) - 1];
    if (comp.size() != static_cast<std::size_t>(source.carrier_size(n)))
      throw Error(ErrorCode::BadInput, "component length must match the source carrier");
    for (int value : comp)
      if (value < 1 || value > target.carrier_size(n))
        throw Error(ErrorCode::BadInput, "component value outside the target carrier");
  }

  for (int k = 1; k <= source.N; ++k)
    for (int n = 1; n <= k; ++n)
      for (const auto& q : enumerate_surjections(k, n))
        for (int z = 1; z <= source.carrier_size(n); ++z) {
          const int along_source = xi.components[static_cast<std::size_t>(k) - 1]
              [static_cast<std::size_t>(source.map_at(q, z)) - 1];
          const int along_target = target.map_at(
              q, xi.components[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(z) - 1]);
          if (along_source != along_target) return false;
        }
  return true;
}

NatTransformation induced_transformation(const TruncatedPresheaf& lifting,
                                         const SymmetricAction& a, const std::vector<int>& eta,
                                         const TruncatedPresheaf& target,
                                         const std::vector<int>& mu, int cap) {
  if (lifting.N != target.N)
    throw Error(ErrorCode::LevelMismatch, "presheaves truncate at different levels");
  const int m = a.m;
  if (m > lifting.N)
    throw Error(ErrorCode::BadInput, "presenting level exceeds the truncation");
  if (eta.size() != static_cast<std::size_t>(a.carrier) ||
      mu.size() != static_cast<std::size_t>(a.carrier))
    throw Error(ErrorCode::BadInput, "eta and mu must be defined on the whole carrier");
  for (int value : mu)
    if (value < 1 || value > target.carrier_size(m))
      throw Error(ErrorCode::BadInput, "mu value outside the target carrier");

  const auto group_tables = tabulate_action(a, cap);
  const auto perms = enumerate_permutations(m, cap);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const Surjection sigma = to_surjection(perms[i]);
    for (int x = 1; x <= a.carrier; ++x)
      if (mu[static_cast<std::size_t>(group_tables[i][static_cast<std::size_t>(x) - 1]) - 1] !=
          target.map_at(sigma, mu[static_cast<std::size_t>(x) - 1]))
        throw Error(ErrorCode::NotEquivariant,
                    "mu does not intertwine the group actions at element " + std::to_string(x));
  }

  NatTransformation xi;
  xi.components.assign(static_cast<std::size_t>(lifting.N), {});
  for (int n = 1; n <= lifting.N; ++n) {
    auto& comp = xi.components[static_cast<std::size_t>(n) - 1];
    comp.assign(static_cast<std::size_t>(lifting.carrier_size(n)), 0);
    if (n >= m)
      for (const auto& q : enumerate_surjections(n, m))
        for (int x = 1; x <= a.carrier; ++x) {
          const int z = lifting.map_at(q, eta[static_cast<std::size_t>(x) - 1]);
          const int value = target.map_at(q, mu[static_cast<std::size_t>(x) - 1]);
          int& slot = comp[static_cast<std::size_t>(z) - 1];
          if (slot == 0)
            slot = value;
          else if (slot != value)
            throw Error(ErrorCode::WitnessConflict,
                        "level " + std::to_string(n) + " element " + std::to_string(z) +
                            " receives conflicting values");
        }
    for (int z = 1; z <= lifting.carrier_size(n); ++z)
      if (comp[static_cast<std::size_t>(z) - 1] == 0)
        throw Error(ErrorCode::WitnessConflict,
                    "level " + std::to_string(n) + " element " + std::to_string(z) +
                        " is not reached from the presenting level");
  }
  return xi;
}

std::vector<NatTransformation> enumerate_nat_transformations(const TruncatedPresheaf& source,
                                                             const TruncatedPresheaf& target,
                                                             std::size_t step_budget) {
  if (source.N != target.N)
    throw Error(ErrorCode::LevelMismatch, "presheaves truncate at different levels");
  const int N = source.N;

  // Generators: elements outside the image of every non-bijective map. All
  // other elements are forced from them by naturality.
  std::vector<std::vector<bool>> derived(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n)
    derived[static_cast<std::size_t>(n) - 1]
        .assign(static_cast<std::size_t>(source.carrier_size(n)), false);
  std::vector<std::vector<Surjection>> by_cod(static_cast<std::size_t>(N) + 1);
  for (int k = 1; k <= N; ++k)
    for (int n = 1; n <= k; ++n)
      for (const auto& q : enumerate_surjections(k, n)) {
        by_cod[static_cast<std::size_t>(n)].push_back(q);
        if (q.is_bijective()) continue;
        for (int z = 1; z <= source.carrier_size(n); ++z)
          derived[static_cast<std::size_t>(k) - 1]
                 [static_cast<std::size_t>(source.map_at(q, z)) - 1] = true;
      }
  std::vector<std::pair<int, int>> generators;
  for (int n = 1; n <= N; ++n)
    for (int z = 1; z <= source.carrier_size(n); ++z)
      if (!derived[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(z) - 1])
        generators.emplace_back(n, z);

  std::vector<std::vector<int>> assignment(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n)
    assignment[static_cast<std::size_t>(n) - 1]
        .assign(static_cast<std::size_t>(source.carrier_size(n)), 0);

  std::vector<NatTransformation> results;
  std::size_t steps = 0;

  // Assign one element and push every naturality consequence; returns the
  // trail of assignments for undoing, or nullopt on a conflict.
  const auto propagate = [&](int level, int element,
                             int value) -> std::optional<std::vector<std::pair<int, int>>> {
    std::vector<std::pair<int, int>> trail;
    const auto set = [&](int lvl, int z, int v) {
      int& slot =
          assignment[static_cast<std::size_t>(lvl) - 1][static_cast<std::size_t>(z) - 1];
      if (slot != 0) return slot == v;
      slot = v;
      trail.emplace_back(lvl, z);
      return true;
    };
    if (!set(level, element, value)) return std::nullopt;
    for (std::size_t head = 0; head < trail.size(); ++head) {
      const auto [lvl, z] = trail[head];
      const int v =
          assignment[static_cast<std::size_t>(lvl) - 1][static_cast<std::size_t>(z) - 1];
      for (const auto& q : by_cod[static_cast<std::size_t>(lvl)])
        if (!set(q.dom, source.map_at(q, z), target.map_at(q, v))) {
          for (const auto& [ul, uz] : trail)
            assignment[static_cast<std::size_t>(ul) - 1][static_cast<std::size_t>(uz) - 1] = 0;
          return std::nullopt;
        }
    }
    return trail;
  };

  const auto unwind = [&](const std::vector<std::pair<int, int>>& trail) {
    for (const auto& [lvl, z] : trail)
      assignment[static_cast<std::size_t>(lvl) - 1][static_cast<std::size_t>(z) - 1] = 0;
  };

  const auto search = [&](auto&& self, std::size_t gi) -> void {
    if (gi == generators.size()) {
      NatTransformation xi{assignment};
      if (is_natural(source, target, xi)) results.push_back(std::move(xi));
      return;
    }
    const auto [level, element] = generators[gi];
    if (assignment[static_cast<std::size_t>(level) - 1][static_cast<std::size_t>(element) - 1] !=
        0) {
      self(self, gi + 1);
      return;
    }
    for (int value = 1; value <= target.carrier_size(level); ++value) {
      if (++steps > step_budget)
        throw Error(ErrorCode::CapExceeded, "transformation search exceeded its step budget");
      auto trail = propagate(level, element, value);
      if (!trail) continue;
      self(self, gi + 1);
      unwind(*trail);
    }
  };
  search(search, 0);
  return results;
}

PresheafUnion disjoint_union_presheaves(const std::vector<TruncatedPresheaf>& parts,
                                        int level_when_empty) {
  const int N = parts.empty() ? level_when_empty : parts.front().N;
  for (const auto& part : parts)
    if (part.N != N)
      throw Error(ErrorCode::LevelMismatch, "summands truncate at different levels");

  PresheafUnion out;
  out.summand_of.assign(static_cast<std::size_t>(N), {});
  out.element_of.assign(static_cast<std::size_t>(N), {});
  std::vector<int> carriers(static_cast<std::size_t>(N), 0);
  for (int n = 1; n <= N; ++n)
    for (std::size_t s = 0; s < parts.size(); ++s) {
      carriers[static_cast<std::size_t>(n) - 1] += parts[s].carrier_size(n);
      for (int z = 1; z <= parts[s].carrier_size(n); ++z) {
        out.summand_of[static_cast<std::size_t>(n) - 1].push_back(static_cast<int>(s) + 1);
        out.element_of[static_cast<std::size_t>(n) - 1].push_back(z);
      }
    }

  std::unordered_map<Surjection, std::vector<int>, SurjectionHash> tables;
  for (int k = 1; k <= N; ++k)
    for (int n = 1; n <= k; ++n)
      for (const auto& q : enumerate_surjections(k, n)) {
        std::vector<int> table;
        table.reserve(static_cast<std::size_t>(carriers[static_cast<std::size_t>(n) - 1]));
        int offset = 0;
        for (const auto& part : parts) {
          for (int value : part.table(q)) table.push_back(value + offset);
          offset += part.carrier_size(k);
        }
        tables.emplace(q, std::move(table));
      }
  out.presheaf = make_presheaf(N, std::move(carriers), std::move(tables));
  return out;
}

TruncatedPresheaf representable_presheaf(int m, int N, int cap) {
  if (m < 1) throw Error(ErrorCode::BadInput, "representing level must be positive");
  if (N < 1) throw Error(ErrorCode::BadInput, "truncation level must be positive");
  if (N > cap)
    throw Error(ErrorCode::CapExceeded,
                "truncation " + std::to_string(N) + " exceeds cap " + std::to_string(cap));

  std::vector<std::vector<Surjection>> carrier(static_cast<std::size_t>(N));
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(N));
  std::vector<int> sizes(static_cast<std::size_t>(N), 0);
  for (int n = 1; n <= N; ++n) {
    if (n >= m) carrier[static_cast<std::size_t>(n) - 1] = enumerate_surjections(n, m);
    const auto& list = carrier[static_cast<std::size_t>(n) - 1];
    sizes[static_cast<std::size_t>(n) - 1] = static_cast<int>(list.size());
    for (std::size_t i = 0; i < list.size(); ++i)
      index[static_cast<std::size_t>(n) - 1][list[i].map] = static_cast<int>(i) + 1;
  }

  std::unordered_map<Surjection, std::vector<int>, SurjectionHash> tables;
  for (int k = 1; k <= N; ++k)
    for (int n = 1; n <= k; ++n)
      for (const auto& p : enumerate_surjections(k, n)) {
        std::vector<int> table;
        for (const auto& g : carrier[static_cast<std::size_t>(n) - 1])
          table.push_back(index[static_cast<std::size_t>(k) - 1].at(compose(g, p).map));
        tables.emplace(p, std::move(table));
      }
  return make_presheaf(N, std::move(sizes), std::move(tables));
}

}  // namespace s5kit
