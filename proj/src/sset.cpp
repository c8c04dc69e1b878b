#include "topo/sset.hpp"

#include <algorithm>

#include "topo/error.hpp"

namespace topo {

bool SimplicialSetData::has(const SimplexId& id) const {
  for (const auto& level : by_dim)
    for (const auto& s : level)
      if (s == id) return true;
  return false;
}

int SimplicialSetData::dim_of(const SimplexId& id) const {
  for (int n = 0; n <= top_dim(); ++n)
    for (const auto& s : by_dim[static_cast<size_t>(n)])
      if (s == id) return n;
  fail("rejected", "unknown simplex '" + id + "'");
}

int SimplicialSetData::index_of(const SimplexId& id) const {
  for (int n = 0; n <= top_dim(); ++n) {
    const auto& level = by_dim[static_cast<size_t>(n)];
    for (size_t i = 0; i < level.size(); ++i)
      if (level[i] == id) return static_cast<int>(i);
  }
  fail("rejected", "unknown simplex '" + id + "'");
}

long long SimplicialSetData::euler_characteristic() const {
  long long chi = 0;
  for (int n = 0; n <= top_dim(); ++n) chi += (n % 2 == 0 ? 1 : -1) * count(n);
  return chi;
}

Json SimplicialSetData::to_json() const {
  Json dims = Json::object();
  for (int n = 0; n <= top_dim(); ++n) dims[std::to_string(n)] = by_dim[static_cast<size_t>(n)];
  Json faces_json = Json::object();
  for (int n = 1; n <= top_dim(); ++n)
    for (const auto& id : by_dim[static_cast<size_t>(n)]) {
      Json lst = Json::array();
      for (const auto& f : faces.at(id))
        lst.push_back(Json{{"degens", f.degens}, {"target", f.target}});
      faces_json[id] = lst;
    }
  return Json{{"version", "ssetv1"}, {"dims", dims}, {"faces", faces_json}};
}

SimplicialSetData SimplicialSetData::from_json(const Json& j) {
  if (!j.contains("version") || j.at("version") != "ssetv1")
    fail("rejected", "missing or unsupported schema version (want ssetv1)");
  SimplicialSetData s;
  const Json& dims = j.at("dims");
  int top = -1;
  for (const auto& [key, val] : dims.items()) top = std::max(top, std::stoi(key));
  s.by_dim.assign(static_cast<size_t>(top + 1), {});
  for (const auto& [key, val] : dims.items())
    s.by_dim[static_cast<size_t>(std::stoi(key))] = val.get<std::vector<SimplexId>>();
  if (j.contains("faces"))
    for (const auto& [id, lst] : j.at("faces").items()) {
      std::vector<DegenerateRef> fs;
      for (const auto& f : lst)
        fs.push_back(DegenerateRef{f.at("degens").get<std::vector<int>>(),
                                   f.at("target").get<SimplexId>()});
      s.faces.emplace(id, std::move(fs));
    }
  return s;
}

ReducedSimplicialSet make_reduced(SimplicialSetData data) {
  ValidationReport rep = validate(data);
  if (!rep.ok()) fail("rejected", "invalid simplicial set: " + rep.issues.front().what);
  if (data.count(0) != 1) fail("rejected", "reduced simplicial set needs exactly one 0-simplex");
  return ReducedSimplicialSet{std::move(data)};
}

std::vector<int> insert_degeneracy(std::vector<int> word, int k) {
  // s_k s_j = s_{j+1} s_k for k <= j; push k right until the word is
  // strictly decreasing, bumping the letters it passes.
  size_t pos = 0;
  while (pos < word.size() && k <= word[pos]) {
    ++word[pos];
    ++pos;
  }
  word.insert(word.begin() + static_cast<long>(pos), k);
  return word;
}

DegenerateRef degenerate_ref(DegenerateRef r, int k) {
  r.degens = insert_degeneracy(std::move(r.degens), k);
  return r;
}

int dim_of_ref(const SimplicialSetData& s, const DegenerateRef& r) {
  return s.dim_of(r.target) + static_cast<int>(r.degens.size());
}

DegenerateRef face_of_ref(const SimplicialSetData& s, const DegenerateRef& r, int i) {
  // Push d_i through the degeneracy word:
  //   d_i s_j = s_{j-1} d_i      (i < j)
  //   d_i s_j = id               (i == j or i == j+1)
  //   d_i s_j = s_j d_{i-1}      (i > j+1)
  std::vector<int> emitted;
  for (size_t pos = 0; pos < r.degens.size(); ++pos) {
    int j = r.degens[pos];
    if (i < j) {
      emitted.push_back(j - 1);
    } else if (i == j || i == j + 1) {
      // Absorbed: the rest of the word survives unchanged.
      std::vector<int> word(emitted);
      word.insert(word.end(), r.degens.begin() + static_cast<long>(pos) + 1, r.degens.end());
      return DegenerateRef{std::move(word), r.target};
    } else {
      emitted.push_back(j);
      i -= 1;
    }
  }
  // The face reaches the nondegenerate target.
  auto it = s.faces.find(r.target);
  if (it == s.faces.end()) fail("rejected", "face of a 0-simplex requested");
  const DegenerateRef& base = it->second.at(static_cast<size_t>(i));
  std::vector<int> word = base.degens;
  for (auto e = emitted.rbegin(); e != emitted.rend(); ++e) word = insert_degeneracy(word, *e);
  return DegenerateRef{std::move(word), base.target};
}

DegenerateRef front_face(const SimplicialSetData& s, const SimplexId& id, int p) {
  DegenerateRef r{{}, id};
  for (int k = s.dim_of(id); k > p; --k) r = face_of_ref(s, r, k);
  return r;
}

DegenerateRef back_face(const SimplicialSetData& s, const SimplexId& id, int q) {
  DegenerateRef r{{}, id};
  int n = s.dim_of(id);
  for (int k = 0; k < n - q; ++k) r = face_of_ref(s, r, 0);
  return r;
}

DegenerateRef vertex_range_face(const SimplicialSetData& s, const SimplexId& id, int a, int b) {
  DegenerateRef r{{}, id};
  int n = s.dim_of(id);
  for (int k = n; k > b; --k) r = face_of_ref(s, r, k);
  for (int k = 0; k < a; ++k) r = face_of_ref(s, r, 0);
  return r;
}

ValidationReport validate(const SimplicialSetData& s) {
  ValidationReport rep;
  std::map<SimplexId, int> dims;
  for (int n = 0; n <= s.top_dim(); ++n)
    for (const auto& id : s.by_dim[static_cast<size_t>(n)]) {
      if (dims.count(id))
        rep.issues.push_back({id, -1, -1, "duplicate identifier '" + id + "'"});
      dims[id] = n;
    }
  if (!rep.ok()) return rep;

  auto check_ref = [&](const SimplexId& owner, int i, const DegenerateRef& f, int want_dim) {
    auto it = dims.find(f.target);
    if (it == dims.end()) {
      rep.issues.push_back({owner, i, -1, "face target '" + f.target + "' does not exist"});
      return false;
    }
    for (size_t k = 0; k + 1 < f.degens.size(); ++k)
      if (f.degens[k] <= f.degens[k + 1]) {
        rep.issues.push_back({owner, i, -1, "degeneracy word not strictly decreasing"});
        return false;
      }
    if (!f.degens.empty() && f.degens.back() < 0) {
      rep.issues.push_back({owner, i, -1, "negative degeneracy index"});
      return false;
    }
    int d = it->second + static_cast<int>(f.degens.size());
    if (d != want_dim) {
      rep.issues.push_back({owner, i, -1,
                            "face has dimension " + std::to_string(d) + ", expected " +
                                std::to_string(want_dim)});
      return false;
    }
    return true;
  };

  for (int n = 1; n <= s.top_dim(); ++n)
    for (const auto& id : s.by_dim[static_cast<size_t>(n)]) {
      auto it = s.faces.find(id);
      if (it == s.faces.end()) {
        rep.issues.push_back({id, -1, -1, "missing face list"});
        continue;
      }
      if (static_cast<int>(it->second.size()) != n + 1) {
        rep.issues.push_back({id, -1, -1, "face list has wrong length"});
        continue;
      }
      bool refs_ok = true;
      for (int i = 0; i <= n; ++i)
        refs_ok = check_ref(id, i, it->second[static_cast<size_t>(i)], n - 1) && refs_ok;
      if (!refs_ok || n < 2) continue;
      DegenerateRef self{{}, id};
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          DegenerateRef lhs = face_of_ref(s, face_of_ref(s, self, j), i);
          DegenerateRef rhs = face_of_ref(s, face_of_ref(s, self, i), j - 1);
          if (!(lhs == rhs))
            rep.issues.push_back({id, i, j, "simplicial identity d_i d_j = d_{j-1} d_i fails"});
        }
    }
  for (const auto& [id, lst] : s.faces)
    if (!dims.count(id))
      rep.issues.push_back({id, -1, -1, "face list for unknown simplex '" + id + "'"});
  return rep;
}

DegenerateRef apply_map(const SimplicialMap& f, const DegenerateRef& r) {
  auto it = f.assign.find(r.target);
  if (it == f.assign.end()) fail("rejected", "map has no assignment for '" + r.target + "'");
  DegenerateRef out = it->second;
  for (auto e = r.degens.rbegin(); e != r.degens.rend(); ++e)
    out.degens = insert_degeneracy(std::move(out.degens), *e);
  return out;
}

ValidationReport validate_map(const SimplicialMap& f) {
  ValidationReport rep;
  for (int n = 0; n <= f.source.top_dim(); ++n)
    for (const auto& id : f.source.by_dim[static_cast<size_t>(n)]) {
      auto it = f.assign.find(id);
      if (it == f.assign.end()) {
        rep.issues.push_back({id, -1, -1, "no assignment for '" + id + "'"});
        continue;
      }
      if (!f.target.has(it->second.target)) {
        rep.issues.push_back({id, -1, -1, "image target missing in codomain"});
        continue;
      }
      if (dim_of_ref(f.target, it->second) != n) {
        rep.issues.push_back({id, -1, -1, "image has wrong dimension"});
        continue;
      }
      for (int i = 0; i <= n && n >= 1; ++i) {
        DegenerateRef lhs = apply_map(f, f.source.faces.at(id)[static_cast<size_t>(i)]);
        DegenerateRef rhs = face_of_ref(f.target, it->second, i);
        if (!(lhs == rhs))
          rep.issues.push_back({id, i, -1, "does not commute with face " + std::to_string(i)});
      }
    }
  return rep;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap out;
  out.source = f.source;
  out.target = g.target;
  for (const auto& [id, ref] : f.assign) out.assign[id] = apply_map(g, ref);
  return out;
}

SimplicialMap identity_map(const SimplicialSetData& s) {
  SimplicialMap out;
  out.source = s;
  out.target = s;
  for (int n = 0; n <= s.top_dim(); ++n)
    for (const auto& id : s.by_dim[static_cast<size_t>(n)]) out.assign[id] = DegenerateRef{{}, id};
  return out;
}

Json SimplicialMap::to_json() const {
  Json assign_json = Json::object();
  for (const auto& [id, ref] : assign)
    assign_json[id] = Json{{"degens", ref.degens}, {"target", ref.target}};
  return Json{{"version", "smapv1"},
              {"source", source.to_json()},
              {"target", target.to_json()},
              {"assign", assign_json}};
}

}  // namespace topo
