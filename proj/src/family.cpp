#include "quadcontract/family.hpp"

#include <algorithm>
#include <fstream>

#include "quadcontract/connectivity.hpp"
#include "quadcontract/util.hpp"

namespace quadcontract {

bool FamilyCatalog::contains(int order, const CanonicalCode& code) const {
  auto it = layers.find(order);
  if (it == layers.end()) return false;
  auto& layer = it->second;
  auto pos = std::lower_bound(layer.begin(), layer.end(), code,
                              [](const FamilyMember& m, const CanonicalCode& c) {
                                return m.code < c;
                              });
  return pos != layer.end() && pos->code == code;
}

const FamilyMember* FamilyCatalog::find(const CanonicalCode& code) const {
  for (const auto& [order, layer] : layers) {
    auto pos = std::lower_bound(layer.begin(), layer.end(), code,
                                [](const FamilyMember& m, const CanonicalCode& c) {
                                  return m.code < c;
                                });
    if (pos != layer.end() && pos->code == code) return &*pos;
  }
  return nullptr;
}

std::vector<CanonicalCode> FamilyCatalog::layer_codes(int order) const {
  std::vector<CanonicalCode> out;
  auto it = layers.find(order);
  if (it == layers.end()) return out;
  for (const auto& m : it->second) out.push_back(m.code);
  return out;
}

std::vector<std::pair<int, CanonicalCode>> FamilyCatalog::chain_of(
    const CanonicalCode& code) const {
  std::vector<std::pair<int, CanonicalCode>> chain;
  const FamilyMember* m = find(code);
  while (m && m->extension_kind != 0) {
    chain.emplace_back(m->extension_kind, m->code);
    m = find(m->parent_code);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

FamilyCatalog generate_family(int n_max, int threads) {
  if (n_max < 8) throw OrderTooSmall("the family starts at order 8");
  FamilyCatalog catalog;
  catalog.n_max = n_max;

  PlaneTriangulation base = g0();
  catalog.layers[8].push_back({canonical_code(base), base, CanonicalCode{}, 0});

  for (int n = 8; n < n_max; ++n) {
    const auto& parents = catalog.layers[n];
    std::vector<std::vector<FamilyMember>> local(parents.size());
    parallel_for(parents.size(), threads, [&](std::size_t pi) {
      const FamilyMember& parent = parents[pi];
      for (int kind : {1, 2}) {
        for (const ExtensionSite& site : find_extension_sites(parent.graph, kind)) {
          PlaneTriangulation child = apply_extension(parent.graph, site);
          local[pi].push_back(
              {canonical_code(child), std::move(child), parent.code, kind});
        }
      }
    });
    std::map<CanonicalCode, FamilyMember> layer;
    for (auto& batch : local)
      for (auto& member : batch) {
        CanonicalCode key = member.code;
        layer.emplace(std::move(key), std::move(member));
      }
    auto& dst = catalog.layers[n + 1];
    dst.reserve(layer.size());
    for (auto& [code, member] : layer) dst.push_back(std::move(member));
  }
  return catalog;
}

void export_catalog(const FamilyCatalog& catalog, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream index(dir / "index.txt");
  index << "# order code_hash parent_hash extension_kind\n";
  for (const auto& [order, layer] : catalog.layers) {
    std::vector<PlaneTriangulation> graphs;
    for (const FamilyMember& m : layer) {
      graphs.push_back(m.graph);
      index << order << ' ' << m.code.hash_hex() << ' '
            << (m.extension_kind == 0 ? std::string("-") : m.parent_code.hash_hex())
            << ' ' << (m.extension_kind == 0 ? std::string("-")
                                             : std::to_string(m.extension_kind))
            << '\n';
    }
    std::ofstream pc(dir / ("family_order_" + std::to_string(order) + ".pc"),
                     std::ios::binary);
    write_planar_code(pc, graphs);
  }
}

namespace {

bool reduce_to_base(const PlaneTriangulation& g, const CanonicalCode& base_code,
                    std::map<CanonicalCode, bool>& memo,
                    std::vector<std::pair<int, CanonicalCode>>& chain) {
  CanonicalCode code = canonical_code(g);
  if (g.order() == 8) return code == base_code;
  auto it = memo.find(code);
  if (it != memo.end() && !it->second) return false;

  // contraction-2 sites first, then contraction-1 (documented search order)
  for (int kind : {2, 1}) {
    for (const ContractionSite& site : find_contraction_sites(g, kind)) {
      PlaneTriangulation h = apply_contraction(g, site);
      if (!is_k_connected(h, 4)) continue;  // family members are 4-connected
      chain.emplace_back(kind, canonical_code(h));
      if (reduce_to_base(h, base_code, memo, chain)) return true;
      chain.pop_back();
    }
  }
  memo[code] = false;
  return false;
}

}  // namespace

ReductionResult is_member_by_reduction(const PlaneTriangulation& g) {
  if (g.order() < 8) return {};
  static const CanonicalCode base_code = canonical_code(g0());
  std::map<CanonicalCode, bool> memo;
  ReductionResult result;
  result.member = reduce_to_base(g, base_code, memo, result.chain);
  if (!result.member) result.chain.clear();
  return result;
}

bool is_extremal(const PlaneTriangulation& g) {
  if (g.order() < 7) throw OrderTooSmall("extremality is defined for order >= 7");
  DegreeClasses dc = degree_classes(g);
  return contractible_edges(g, 4).size() == dc.v_ge5.size() + 2;
}

}  // namespace quadcontract
