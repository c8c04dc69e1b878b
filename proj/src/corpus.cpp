#include "topo/corpus.hpp"

#include "topo/error.hpp"

namespace topo {
namespace {

GroupPresentation presentation(const std::vector<std::string>& gens,
                               const std::vector<std::string>& relators) {
  GroupPresentation p;
  p.gens = gens;
  for (const auto& r : relators) {
    Word w = parse_word(r, gens);
    if (w.empty()) fail("internal", "empty corpus relator");
    p.relators.push_back(std::move(w));
  }
  return p;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"delta1", "circle: Delta^1 with boundary collapsed",
       [] { return delta_quotient(1); }},
      {"s2", "2-sphere: Delta^2 with boundary collapsed", [] { return delta_quotient(2); }},
      {"rp2", "presentation complex of <a | a a> (real projective plane)",
       [] { return presentation_complex(presentation({"a"}, {"a a"})); }},
      {"p3", "presentation complex of <a | a a a> (pseudo-projective plane)",
       [] { return presentation_complex(presentation({"a"}, {"a a a"})); }},
      {"torus", "presentation complex of <a,b | a b a^-1 b^-1>",
       [] {
         return presentation_complex(presentation({"a", "b"}, {"a b a^-1 b^-1"}));
       }},
      {"binary-icosahedral",
       "presentation complex of <s,t | (st)^2 s^-3, (st)^2 t^-5>, order 120, acyclic",
       [] {
         return presentation_complex(presentation(
             {"s", "t"},
             {"s t s t s^-1 s^-1 s^-1", "s t s t t^-1 t^-1 t^-1 t^-1 t^-1"}));
       }},
      {"higman",
       "presentation complex of the Higman group (acyclic, no finite quotients; "
       "every implemented invariant is inconclusive)",
       [] {
         return presentation_complex(presentation(
             {"a", "b", "c", "d"},
             {"b^-1 a b a^-1 a^-1", "c^-1 b c b^-1 b^-1", "d^-1 c d c^-1 c^-1",
              "a^-1 d a d^-1 d^-1"}));
       }},
  };
  return entries;
}

ReducedSimplicialSet corpus_space(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e.build();
  fail("rejected", "unknown corpus space '" + name + "'");
}

SimplicialMap load_map_json(const Json& j) {
  if (!j.contains("version") || j.at("version") != "smapv1")
    fail("rejected", "missing or unsupported schema version (want smapv1)");
  auto space = [](const Json& spec) {
    if (spec.is_string()) return corpus_space(spec.get<std::string>()).data;
    return SimplicialSetData::from_json(spec);
  };
  SimplicialMap f;
  f.source = space(j.at("source"));
  f.target = space(j.at("target"));
  for (const auto& [id, ref] : j.at("assign").items())
    f.assign[id] = DegenerateRef{ref.at("degens").get<std::vector<int>>(),
                                 ref.at("target").get<SimplexId>()};
  ValidationReport rep = validate_map(f);
  if (!rep.ok()) fail("rejected", "invalid simplicial map: " + rep.issues.front().what);
  return f;
}

SimplicialMap corpus_map(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) fail("rejected", "map spec must be identity:NAME or collapse:NAME");
  std::string kind = spec.substr(0, colon);
  std::string name = spec.substr(colon + 1);
  ReducedSimplicialSet space = corpus_space(name);
  if (kind == "identity") return identity_map(space.data);
  if (kind == "collapse") return collapse_to_point(space.data);
  fail("rejected", "unknown map kind '" + kind + "'");
}

}  // namespace topo
