#include "topo/pi_module.hpp"

#include "topo/error.hpp"
#include "topo/smith.hpp"

namespace topo {

Json PiModule::to_json() const {
  Json act = Json::object();
  for (const auto& [name, m] : action) act[name] = m.to_json();
  return Json{{"rank", rank}, {"action", act}};
}

PiModule PiModule::from_json(const Json& j) {
  PiModule m;
  m.rank = j.at("rank").get<int>();
  if (m.rank < 0) fail("rejected", "module rank must be nonnegative");
  for (const auto& [name, mat] : j.at("action").items())
    m.action.emplace(name, IntMatrix::from_json(mat));
  return m;
}

std::vector<std::string> validate_module(const PiModule& m, const GroupPresentation& p) {
  std::vector<std::string> issues;
  for (const auto& g : p.gens) {
    auto it = m.action.find(g);
    if (it == m.action.end()) {
      issues.push_back("missing action for generator " + g);
      continue;
    }
    if (it->second.rows() != m.rank || it->second.cols() != m.rank) {
      issues.push_back("action of " + g + " has wrong shape");
      continue;
    }
    if (!is_unimodular(it->second)) issues.push_back("action of " + g + " not invertible over Z");
  }
  if (!issues.empty()) return issues;
  for (size_t r = 0; r < p.relators.size(); ++r) {
    IntMatrix w = action_of_word(m, p, p.relators[r]);
    if (w != IntMatrix::identity(m.rank))
      issues.push_back("relator " + std::to_string(r) + " does not act as the identity");
  }
  return issues;
}

IntMatrix action_of_word(const PiModule& m, const GroupPresentation& p, const Word& w) {
  IntMatrix out = IntMatrix::identity(m.rank);
  std::map<int, IntMatrix> inverses;
  for (Letter l : w) {
    int g = gen_of(l);
    const std::string& name = p.gens.at(static_cast<size_t>(g));
    auto it = m.action.find(name);
    if (it == m.action.end()) fail("rejected", "missing action for generator " + name);
    if (is_inverse(l)) {
      auto cached = inverses.find(g);
      if (cached == inverses.end())
        cached = inverses.emplace(g, unimodular_inverse(it->second)).first;
      out = out * cached->second;
    } else {
      out = out * it->second;
    }
  }
  return out;
}

PiModule regular_module(const CosetTable& t) {
  PiModule m;
  m.rank = t.size();
  for (int g = 0; g < t.gens(); ++g) {
    IntMatrix mat(m.rank, m.rank);
    for (int c = 0; c < m.rank; ++c) mat.set(c, t.apply(c, letter_of(g)), 1);
    m.action.emplace(t.gen_names[static_cast<size_t>(g)], std::move(mat));
  }
  return m;
}

PiModule trivial_module(const GroupPresentation& p, int rank) {
  PiModule m;
  m.rank = rank;
  for (const auto& g : p.gens) m.action.emplace(g, IntMatrix::identity(rank));
  return m;
}

}  // namespace topo
