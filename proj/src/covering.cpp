#include "topo/covering.hpp"

#include "topo/cobar.hpp"
#include "topo/error.hpp"

namespace topo {
namespace {

SimplexId pair_id(const SimplexId& id, int c) { return id + "@" + std::to_string(c); }

void require_table_for(const ReducedSimplicialSet& x, const CosetTable& t,
                       GroupPresentation* out_pres) {
  GroupPresentation p = pi1_presentation(x);
  auto issues = t.validate(p);
  if (!issues.empty())
    fail("rejected", "coset table does not fit pi1 presentation: " + issues.front());
  if (out_pres) *out_pres = std::move(p);
}

}  // namespace

SimplicialSetData covering_space(const ReducedSimplicialSet& x, const CosetTable& t) {
  require_table_for(x, t, nullptr);
  const SimplicialSetData& s = x.data;
  const int n_cosets = t.size();

  SimplicialSetData cover;
  cover.by_dim.assign(static_cast<size_t>(s.top_dim()) + 1, {});
  for (int n = 0; n <= s.top_dim(); ++n)
    for (const auto& id : s.by_dim[static_cast<size_t>(n)])
      for (int c = 0; c < n_cosets; ++c)
        cover.by_dim[static_cast<size_t>(n)].push_back(pair_id(id, c));

  for (int n = 1; n <= s.top_dim(); ++n)
    for (const auto& id : s.by_dim[static_cast<size_t>(n)]) {
      DegenerateRef front_edge = front_face(s, id, 1);
      int edge_gen = front_edge.degenerate() ? -1 : t.gens() == 0 ? -1 : [&] {
        for (int g = 0; g < t.gens(); ++g)
          if (t.gen_names[static_cast<size_t>(g)] == front_edge.target) return g;
        fail("rejected", "edge '" + front_edge.target + "' missing from coset table");
      }();
      const auto& base_faces = s.faces.at(id);
      for (int c = 0; c < n_cosets; ++c) {
        std::vector<DegenerateRef> fs;
        fs.reserve(base_faces.size());
        for (int i = 0; i <= n; ++i) {
          int cc = c;
          if (i == 0 && edge_gen >= 0) cc = t.apply(c, letter_of(edge_gen));
          const DegenerateRef& b = base_faces[static_cast<size_t>(i)];
          fs.push_back(DegenerateRef{b.degens, pair_id(b.target, cc)});
        }
        cover.faces.emplace(pair_id(id, c), std::move(fs));
      }
    }
  return cover;
}

SimplicialMap deck_transformation(const ReducedSimplicialSet& x, const CosetTable& t, int h) {
  if (h < 0 || h >= t.size()) fail("invalid-input", "no such coset");
  require_table_for(x, t, nullptr);
  std::vector<Word> reps = t.representatives();
  SimplicialSetData cover = covering_space(x, t);
  SimplicialMap f;
  f.source = cover;
  f.target = cover;
  for (int n = 0; n <= x.data.top_dim(); ++n)
    for (const auto& id : x.data.by_dim[static_cast<size_t>(n)])
      for (int c = 0; c < t.size(); ++c)
        f.assign[pair_id(id, c)] =
            DegenerateRef{{}, pair_id(id, t.trace(h, reps[static_cast<size_t>(c)]))};
  return f;
}

}  // namespace topo
