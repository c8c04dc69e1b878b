#include "topo/group.hpp"

#include <sstream>

#include "topo/int_matrix.hpp"
#include "topo/smith.hpp"

namespace topo {

std::string word_str(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "e";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += gens.at(static_cast<size_t>(gen_of(l)));
    if (is_inverse(l)) out += "^-1";
  }
  return out;
}

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    int g = -1;
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == tok) g = static_cast<int>(i);
    if (g < 0) fail("rejected", "unknown generator '" + tok + "'");
    w.push_back(letter_of(g, inv));
  }
  return free_reduce(w);
}

int GroupPresentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == name) return static_cast<int>(i);
  fail("rejected", "unknown generator '" + name + "'");
}

void GroupPresentation::add_relator(Word w) {
  w = free_reduce(std::move(w));
  if (!w.empty()) relators.push_back(std::move(w));
}

Json GroupPresentation::to_json() const {
  Json rel = Json::array();
  for (const auto& r : relators) rel.push_back(word_str(r, gens));
  return Json{{"gens", gens}, {"relators", rel}};
}

GroupPresentation GroupPresentation::from_json(const Json& j) {
  GroupPresentation p;
  p.gens = j.at("gens").get<std::vector<std::string>>();
  for (const auto& r : j.at("relators")) {
    Word w = parse_word(r.get<std::string>(), p.gens);
    if (w.empty()) fail("rejected", "empty relator");
    p.relators.push_back(w);
  }
  return p;
}

FGAbelianGroup abelianization(const GroupPresentation& p) {
  IntMatrix m(static_cast<int>(p.gens.size()), static_cast<int>(p.relators.size()));
  for (size_t j = 0; j < p.relators.size(); ++j)
    for (Letter l : p.relators[j])
      m.add_at(gen_of(l), static_cast<int>(j), is_inverse(l) ? -1 : 1);
  SmithForm s = smith_normal_form(m);
  FGAbelianGroup out;
  out.free_rank = static_cast<int>(p.gens.size()) - s.rank;
  for (const auto& d : s.diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace topo
