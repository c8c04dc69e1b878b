#include "topo/models.hpp"

#include "topo/error.hpp"

namespace topo {
namespace {

// The unique degenerate m-simplex on a vertex: s_{m-1} ... s_0 v.
DegenerateRef collapsed_simplex(const SimplexId& vertex, int m) {
  DegenerateRef r{{}, vertex};
  for (int k = m - 1; k >= 0; --k) r.degens.push_back(k);
  return r;
}

}  // namespace

ReducedSimplicialSet point_model() {
  SimplicialSetData s;
  s.by_dim = {{"v"}};
  return make_reduced(std::move(s));
}

ReducedSimplicialSet delta_quotient(int n) {
  if (n < 1) fail("rejected", "delta_quotient requires n >= 1");
  SimplicialSetData s;
  s.by_dim.assign(static_cast<size_t>(n) + 1, {});
  s.by_dim[0] = {"v"};
  s.by_dim[static_cast<size_t>(n)] = {"c"};
  std::vector<DegenerateRef> fs(static_cast<size_t>(n) + 1, collapsed_simplex("v", n - 1));
  s.faces.emplace("c", std::move(fs));
  return make_reduced(std::move(s));
}

ReducedSimplicialSet wedge_of(const std::vector<ReducedSimplicialSet>& parts) {
  SimplicialSetData s;
  s.by_dim = {{"v"}};
  for (size_t k = 0; k < parts.size(); ++k) {
    const SimplicialSetData& part = parts[k].data;
    const SimplexId& base = parts[k].base_vertex();
    std::string prefix = "s" + std::to_string(k) + ".";
    auto rename = [&](const SimplexId& id) -> SimplexId {
      return id == base ? SimplexId("v") : prefix + id;
    };
    if (part.top_dim() > s.top_dim()) s.by_dim.resize(static_cast<size_t>(part.top_dim()) + 1);
    for (int n = 1; n <= part.top_dim(); ++n)
      for (const auto& id : part.by_dim[static_cast<size_t>(n)]) {
        s.by_dim[static_cast<size_t>(n)].push_back(rename(id));
        std::vector<DegenerateRef> fs;
        for (const auto& f : part.faces.at(id)) fs.push_back(DegenerateRef{f.degens, rename(f.target)});
        s.faces.emplace(rename(id), std::move(fs));
      }
  }
  return make_reduced(std::move(s));
}

ReducedSimplicialSet presentation_complex(const GroupPresentation& p) {
  for (const Word& w : p.relators)
    if (w.empty() || free_reduce(w) != w) fail("rejected", "relators must be reduced and nonempty");

  SimplicialSetData s;
  s.by_dim.assign(3, {});
  s.by_dim[0] = {"v"};
  for (const auto& g : p.gens) s.by_dim[1].push_back(g);

  const DegenerateRef degenerate_edge = collapsed_simplex("v", 1);
  const DegenerateRef vertex_ref{{}, "v"};
  auto loop_faces = [&](const SimplexId&) {
    return std::vector<DegenerateRef>{vertex_ref, vertex_ref};
  };
  for (const auto& g : p.gens) s.faces.emplace(g, loop_faces(g));

  for (size_t r = 0; r < p.relators.size(); ++r) {
    const Word& w = p.relators[r];
    const int len = static_cast<int>(w.size());
    std::string rp = "r" + std::to_string(r) + ".";

    // Prefix edges p_0 .. p_len; p_0 and p_len are the degenerate edge.
    std::vector<DegenerateRef> prefix(static_cast<size_t>(len) + 1, degenerate_edge);
    for (int i = 1; i < len; ++i) {
      if (i == 1 && !is_inverse(w[0])) {
        prefix[1] = DegenerateRef{{}, p.gens[static_cast<size_t>(gen_of(w[0]))]};
        continue;
      }
      SimplexId pid = rp + "p" + std::to_string(i);
      s.by_dim[1].push_back(pid);
      s.faces.emplace(pid, loop_faces(pid));
      prefix[static_cast<size_t>(i)] = DegenerateRef{{}, pid};
    }

    int tri = 0;
    for (int i = 0; i < len; ++i) {
      // Triangle for p_{i+1} = p_i * x_{i+1}; skipped when the first letter
      // is positive and p_1 is its own edge (the relation is tautological).
      if (i == 0 && len >= 2 && !is_inverse(w[0])) continue;
      Letter x = w[static_cast<size_t>(i)];
      DegenerateRef edge{{}, p.gens[static_cast<size_t>(gen_of(x))]};
      SimplexId tid = rp + "t" + std::to_string(++tri);
      s.by_dim[2].push_back(tid);
      std::vector<DegenerateRef> fs(3);
      if (!is_inverse(x)) {
        fs[0] = edge;                                 // d0
        fs[1] = prefix[static_cast<size_t>(i) + 1];   // d1
        fs[2] = prefix[static_cast<size_t>(i)];       // d2
      } else {
        fs[0] = edge;
        fs[1] = prefix[static_cast<size_t>(i)];
        fs[2] = prefix[static_cast<size_t>(i) + 1];
      }
      s.faces.emplace(tid, std::move(fs));
    }
  }
  return make_reduced(std::move(s));
}

SimplicialMap collapse_to_point(const SimplicialSetData& s) {
  SimplicialMap f;
  f.source = s;
  f.target = point_model().data;
  for (int n = 0; n <= s.top_dim(); ++n)
    for (const auto& id : s.by_dim[static_cast<size_t>(n)])
      f.assign[id] = collapsed_simplex("v", n);
  return f;
}

}  // namespace topo
