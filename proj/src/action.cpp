#include "s5kit/action.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "s5kit/detail/union_find.hpp"

namespace s5kit {
namespace {

bool is_bijection_table(const std::vector<int>& table, int size) {
  if (table.size() != static_cast<std::size_t>(size)) return false;
  std::vector<bool> hit(static_cast<std::size_t>(size), false);
  for (int v : table) {
    if (v < 1 || v > size || hit[static_cast<std::size_t>(v) - 1]) return false;
    hit[static_cast<std::size_t>(v) - 1] = true;
  }
  return true;
}

std::vector<int> swap_letters(int m) {
  std::vector<int> map(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) map[static_cast<std::size_t>(i)] = i + 1;
  if (m >= 2) std::swap(map[0], map[1]);
  return map;
}

std::vector<int> cycle_letters(int m) {
  std::vector<int> map(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) map[static_cast<std::size_t>(i)] = (i + 1) % m + 1;
  return map;
}

struct GroupTabulation {
  std::vector<Permutation> perms;           // lexicographic, identity first
  std::map<std::vector<int>, int> index_of;
  std::vector<std::vector<int>> tables;     // carrier table per group element
  std::vector<std::string> failures;
};

// Breadth-first tabulation over the Cayley graph on the two generators.
// Whenever a product reaches an element twice, the carrier tables must agree;
// agreement along every edge makes sigma -> table a well-defined
// anti-homomorphism with the identity acting trivially, which is exactly the
// pair of action axioms.
GroupTabulation tabulate(const SymmetricAction& a, int cap) {
  GroupTabulation out;
  if (!is_bijection_table(a.gen_swap, a.carrier))
    out.failures.push_back("gen_swap is not a bijection of the carrier");
  if (!is_bijection_table(a.gen_cycle, a.carrier))
    out.failures.push_back("gen_cycle is not a bijection of the carrier");
  if (a.m < 1) out.failures.push_back("degree must be positive");
  if (!out.failures.empty()) return out;

  out.perms = enumerate_permutations(a.m, cap);
  for (std::size_t i = 0; i < out.perms.size(); ++i)
    out.index_of[out.perms[i].map] = static_cast<int>(i);

  const std::vector<std::pair<std::vector<int>, const std::vector<int>*>> gens = {
      {swap_letters(a.m), &a.gen_swap},
      {cycle_letters(a.m), &a.gen_cycle},
  };

  out.tables.assign(out.perms.size(), {});
  std::vector<bool> visited(out.perms.size(), false);
  std::vector<int> identity(static_cast<std::size_t>(a.carrier));
  for (int x = 0; x < a.carrier; ++x) identity[static_cast<std::size_t>(x)] = x + 1;
  out.tables[0] = std::move(identity);
  visited[0] = true;

  std::vector<int> queue = {0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int i = queue[static_cast<std::size_t>(head)];
    const std::vector<int>& sigma = out.perms[static_cast<std::size_t>(i)].map;
    for (const auto& [letters, gen_table] : gens) {
      std::vector<int> product(sigma.size());
      for (std::size_t j = 0; j < sigma.size(); ++j)
        product[j] = sigma[static_cast<std::size_t>(letters[j]) - 1];
      const int target = out.index_of.at(product);

      std::vector<int> table(out.tables[static_cast<std::size_t>(i)].size());
      for (std::size_t x = 0; x < table.size(); ++x)
        table[x] = (*gen_table)[static_cast<std::size_t>(
                       out.tables[static_cast<std::size_t>(i)][x]) -
                   1];

      if (!visited[static_cast<std::size_t>(target)]) {
        out.tables[static_cast<std::size_t>(target)] = std::move(table);
        visited[static_cast<std::size_t>(target)] = true;
        queue.push_back(target);
      } else if (out.tables[static_cast<std::size_t>(target)] != table) {
        out.failures.push_back("generator products give conflicting carrier tables at permutation " +
                               std::to_string(target));
        return out;
      }
    }
  }
  return out;
}

}  // namespace

SymmetricAction make_action(int m, int carrier, std::vector<int> gen_swap,
                            std::vector<int> gen_cycle) {
  if (m < 1) throw Error(ErrorCode::BadInput, "degree must be positive");
  if (carrier < 0) throw Error(ErrorCode::BadInput, "carrier size must be nonnegative");
  if (!is_bijection_table(gen_swap, carrier))
    throw Error(ErrorCode::BadInput, "gen_swap must be a bijection of the carrier");
  if (!is_bijection_table(gen_cycle, carrier))
    throw Error(ErrorCode::BadInput, "gen_cycle must be a bijection of the carrier");
  return SymmetricAction{m, carrier, std::move(gen_swap), std::move(gen_cycle)};
}

ActionReport validate_action(const SymmetricAction& a, int cap) {
  return ActionReport{tabulate(a, cap).failures};
}

std::vector<std::vector<int>> tabulate_action(const SymmetricAction& a, int cap) {
  // The two generators generate the whole group, so the breadth-first pass
  // fills every table or reports a conflict.
  GroupTabulation t = tabulate(a, cap);
  if (!t.failures.empty()) throw Error(ErrorCode::NotEquivariant, t.failures.front());
  return std::move(t.tables);
}

int apply(const SymmetricAction& a, const Permutation& sigma, int x) {
  if (sigma.degree != a.m)
    throw Error(ErrorCode::DegreeMismatch, "permutation degree " + std::to_string(sigma.degree) +
                                               " does not match action degree " +
                                               std::to_string(a.m));
  if (x < 1 || x > a.carrier)
    throw Error(ErrorCode::OutOfRange, "element " + std::to_string(x) + " outside carrier");

  std::vector<int> inv_cycle(static_cast<std::size_t>(a.carrier));
  for (int v = 1; v <= a.carrier; ++v)
    inv_cycle[static_cast<std::size_t>(a.gen_cycle[static_cast<std::size_t>(v) - 1]) - 1] = v;

  // Bubble-sort sigma's one-line form to the identity; each recorded swap at
  // position i multiplies sigma on the right by the transposition (i i+1).
  std::vector<int> arr = sigma.map;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < a.m; ++i)
      if (arr[static_cast<std::size_t>(i)] > arr[static_cast<std::size_t>(i) + 1]) {
        std::swap(arr[static_cast<std::size_t>(i)], arr[static_cast<std::size_t>(i) + 1]);
        swaps.push_back(i + 1);
        moved = true;
      }
  }

  // sigma = t_{last} o ... o t_{first}, so the right-action tables compose
  // with the last recorded transposition hitting x first. Each adjacent
  // transposition (i i+1) acts through the cycle conjugation of the swap.
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    const int i = *it;
    for (int k = 1; k < i; ++k) x = a.gen_cycle[static_cast<std::size_t>(x) - 1];
    x = a.gen_swap[static_cast<std::size_t>(x) - 1];
    for (int k = 1; k < i; ++k) x = inv_cycle[static_cast<std::size_t>(x) - 1];
  }
  return x;
}

OrbitDecomposition orbits(const SymmetricAction& a) {
  detail::UnionFind uf(a.carrier);
  for (int x = 1; x <= a.carrier; ++x) {
    uf.unite(x - 1, a.gen_swap[static_cast<std::size_t>(x) - 1] - 1);
    uf.unite(x - 1, a.gen_cycle[static_cast<std::size_t>(x) - 1] - 1);
  }
  OrbitDecomposition out;
  out.orbit_of.assign(static_cast<std::size_t>(a.carrier), 0);
  std::vector<int> id_of_root(static_cast<std::size_t>(a.carrier), 0);
  for (int x = 0; x < a.carrier; ++x) {
    const int root = uf.find(x);
    if (id_of_root[static_cast<std::size_t>(root)] == 0)
      id_of_root[static_cast<std::size_t>(root)] = ++out.orbit_count;
    out.orbit_of[static_cast<std::size_t>(x)] = id_of_root[static_cast<std::size_t>(root)];
  }
  return out;
}

bool fix_is_trivial(const SymmetricAction& a, int x, int cap) {
  if (x < 1 || x > a.carrier)
    throw Error(ErrorCode::OutOfRange, "element " + std::to_string(x) + " outside carrier");
  const auto tables = tabulate_action(a, cap);
  for (std::size_t i = 1; i < tables.size(); ++i)
    if (tables[i][static_cast<std::size_t>(x) - 1] == x) return false;
  return true;
}

std::vector<bool> fix_trivial_elements(const SymmetricAction& a, int cap) {
  const auto tables = tabulate_action(a, cap);
  std::vector<bool> trivial(static_cast<std::size_t>(a.carrier), true);
  for (std::size_t i = 1; i < tables.size(); ++i)
    for (int x = 1; x <= a.carrier; ++x)
      if (tables[i][static_cast<std::size_t>(x) - 1] == x)
        trivial[static_cast<std::size_t>(x) - 1] = false;
  return trivial;
}

bool is_faithful(const SymmetricAction& a, int cap) {
  const auto trivial = fix_trivial_elements(a, cap);
  return std::all_of(trivial.begin(), trivial.end(), [](bool b) { return b; });
}

bool is_transitive(const SymmetricAction& a) { return orbits(a).orbit_count <= 1; }

SymmetricAction canonical_action(int m, int cap) {
  if (m < 1) throw Error(ErrorCode::BadInput, "degree must be positive");
  const auto perms = enumerate_permutations(m, cap);
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < perms.size(); ++i) index_of[perms[i].map] = static_cast<int>(i);

  const auto act_by = [&](const std::vector<int>& letters) {
    std::vector<int> table(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
      std::vector<int> product(perms[i].map.size());
      for (std::size_t j = 0; j < product.size(); ++j)
        product[j] = perms[i].map[static_cast<std::size_t>(letters[j]) - 1];
      table[i] = index_of.at(product) + 1;
    }
    return table;
  };
  return SymmetricAction{m, static_cast<int>(perms.size()), act_by(swap_letters(m)),
                         act_by(cycle_letters(m))};
}

FaithfulSplit faithful_part(const SymmetricAction& a, int cap) {
  const auto trivial = fix_trivial_elements(a, cap);
  FaithfulSplit out;
  std::vector<int> position(static_cast<std::size_t>(a.carrier), 0);
  for (int x = 1; x <= a.carrier; ++x) {
    auto& side = trivial[static_cast<std::size_t>(x) - 1] ? out.faithful_elements
                                                          : out.rest_elements;
    side.push_back(x);
    position[static_cast<std::size_t>(x) - 1] = static_cast<int>(side.size());
  }
  const auto restrict_to = [&](const std::vector<int>& members) {
    std::vector<int> swap_table, cycle_table;
    for (int x : members) {
      swap_table.push_back(position[static_cast<std::size_t>(
          a.gen_swap[static_cast<std::size_t>(x) - 1]) - 1]);
      cycle_table.push_back(position[static_cast<std::size_t>(
          a.gen_cycle[static_cast<std::size_t>(x) - 1]) - 1]);
    }
    return make_action(a.m, static_cast<int>(members.size()), std::move(swap_table),
                       std::move(cycle_table));
  };
  out.faithful = restrict_to(out.faithful_elements);
  out.rest = restrict_to(out.rest_elements);
  return out;
}

std::vector<CanonicalOrbit> decompose_faithful(const SymmetricAction& a, int cap) {
  if (!is_faithful(a, cap))
    throw Error(ErrorCode::NotFaithful, "some element has a nontrivial stabilizer");
  const auto tables = tabulate_action(a, cap);
  const auto decomposition = orbits(a);

  std::vector<CanonicalOrbit> out(static_cast<std::size_t>(decomposition.orbit_count));
  for (int x = 1; x <= a.carrier; ++x) {
    auto& orbit = out[static_cast<std::size_t>(
        decomposition.orbit_of[static_cast<std::size_t>(x) - 1]) - 1];
    if (orbit.elements.empty()) orbit.base = x;  // least member comes first
    orbit.elements.push_back(0);
  }
  for (auto& orbit : out)
    for (std::size_t i = 0; i < tables.size(); ++i)
      orbit.elements[i] = tables[i][static_cast<std::size_t>(orbit.base) - 1];
  return out;
}

SymmetricAction action_disjoint_union(const SymmetricAction& a, const SymmetricAction& b) {
  if (a.m != b.m)
    throw Error(ErrorCode::DegreeMismatch, "disjoint union needs equal degrees");
  std::vector<int> swap_table = a.gen_swap;
  std::vector<int> cycle_table = a.gen_cycle;
  for (int v : b.gen_swap) swap_table.push_back(v + a.carrier);
  for (int v : b.gen_cycle) cycle_table.push_back(v + a.carrier);
  return SymmetricAction{a.m, a.carrier + b.carrier, std::move(swap_table),
                         std::move(cycle_table)};
}

SymmetricAction relabel_action(const SymmetricAction& a, const Permutation& relabel) {
  if (relabel.degree != a.carrier)
    throw Error(ErrorCode::DegreeMismatch, "relabeling degree must equal the carrier size");
  std::vector<int> swap_table(a.gen_swap.size()), cycle_table(a.gen_cycle.size());
  for (int x = 1; x <= a.carrier; ++x) {
    swap_table[static_cast<std::size_t>(relabel(x)) - 1] =
        relabel(a.gen_swap[static_cast<std::size_t>(x) - 1]);
    cycle_table[static_cast<std::size_t>(relabel(x)) - 1] =
        relabel(a.gen_cycle[static_cast<std::size_t>(x) - 1]);
  }
  return SymmetricAction{a.m, a.carrier, std::move(swap_table), std::move(cycle_table)};
}

}  // namespace s5kit
