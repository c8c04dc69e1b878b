#include "topo/detect.hpp"

#include <deque>

#include "topo/error.hpp"

namespace topo {
namespace {

struct Sides {
  ReducedSimplicialSet src, tgt;
  GroupPresentation p_src, p_tgt;
  // Induced generator map: per source edge, a target edge word (empty for
  // degenerate images).
  std::vector<Word> edge_image;
};

Sides split_map(const SimplicialMap& f) {
  ValidationReport rep = validate_map(f);
  if (!rep.ok()) fail("rejected", "invalid simplicial map: " + rep.issues.front().what);
  Sides s{make_reduced(f.source), make_reduced(f.target), {}, {}, {}};
  s.p_src = pi1_presentation(s.src);
  s.p_tgt = pi1_presentation(s.tgt);
  for (const auto& e : s.p_src.gens) {
    const DegenerateRef& image = f.assign.at(e);
    Word w;
    if (!image.degenerate()) w.push_back(letter_of(s.p_tgt.gen_index(image.target)));
    s.edge_image.push_back(std::move(w));
  }
  return s;
}

Word map_word(const Sides& s, const Word& w) {
  Word out;
  for (Letter l : w) {
    const Word& img = s.edge_image[static_cast<size_t>(gen_of(l))];
    if (is_inverse(l)) {
      Word inv = word_inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return free_reduce(out);
}

PiModule restrict_module(const Sides& s, const PiModule& m_target) {
  PiModule out;
  out.rank = m_target.rank;
  for (size_t g = 0; g < s.p_src.gens.size(); ++g) {
    const Word& img = s.edge_image[g];
    if (img.empty())
      out.action.emplace(s.p_src.gens[g], IntMatrix::identity(m_target.rank));
    else
      out.action.emplace(s.p_src.gens[g],
                         m_target.action.at(s.p_tgt.gens[static_cast<size_t>(gen_of(img[0]))]));
  }
  return out;
}

std::string groups_str(const std::vector<FGAbelianGroup>& gs) {
  std::string out = "(";
  for (size_t i = 0; i < gs.size(); ++i) {
    if (i) out += ", ";
    out += gs[i].str();
  }
  return out + ")";
}

}  // namespace

Json Witness::to_json() const {
  return Json{{"type", kind},
              {"name", name},
              {"degree", degree},
              {"source", source_value},
              {"target", target_value}};
}

Json Verdict::to_json() const {
  Json ws = Json::array();
  for (const auto& w : witnesses) ws.push_back(w.to_json());
  Json ts = Json::array();
  for (const auto& t : transcript)
    ts.push_back(Json{{"check", t.check}, {"inputs_hash", t.inputs_hash}, {"result", t.result}});
  return Json{{"outcome", not_weak_equivalence ? "not-weak-equivalence" : "consistent-up-to"},
              {"depth", depth},
              {"witnesses", ws},
              {"transcript", ts}};
}

OrdinaryReport ordinary_quasi_iso(const SimplicialMap& f, int up_to) {
  Sides s = split_map(f);
  DgCoalgebra ca = normalized_chains(s.src);
  DgCoalgebra cb = normalized_chains(s.tgt);
  ChainMap fm = induced_chain_map(f);
  OrdinaryReport out;
  for (int n = 0; n <= up_to; ++n) {
    HomologyMap h = induced_map_on_homology(ca.complex, cb.complex, fm, n);
    if (!h.iso && out.iso_up_to) {
      out.iso_up_to = false;
      out.witness = Witness{"ordinary-homology", "integral", n, h.source.str(), h.target.str()};
    }
    out.per_degree.push_back(std::move(h));
  }
  return out;
}

PartialVerdict compare_pi1(const SimplicialMap& f, int tc_budget) {
  Sides s = split_map(f);
  PartialVerdict out;

  FGAbelianGroup ab_src = abelianization(s.p_src);
  FGAbelianGroup ab_tgt = abelianization(s.p_tgt);
  if (ab_src == ab_tgt) {
    out.evidence.push_back("abelianization " + ab_src.str() + " on both sides");
  } else {
    out.distinguished = true;
    out.witnesses.push_back(Witness{"pi1", "abelianization", -1, ab_src.str(), ab_tgt.str()});
  }

  EnumerationResult e_src = todd_coxeter(s.p_src, tc_budget);
  EnumerationResult e_tgt = todd_coxeter(s.p_tgt, tc_budget);
  if (e_src.completed && e_tgt.completed) {
    int n_src = e_src.table.size();
    int n_tgt = e_tgt.table.size();
    if (n_src != n_tgt) {
      out.distinguished = true;
      out.witnesses.push_back(
          Witness{"pi1", "order", -1, std::to_string(n_src), std::to_string(n_tgt)});
    } else {
      // Equal finite orders: the induced map is an isomorphism iff it is
      // surjective. The image subgroup is the orbit of coset 0 under the
      // image permutations (regular action).
      for (size_t r = 0; r < s.p_src.relators.size(); ++r)
        if (e_tgt.table.trace(0, map_word(s, s.p_src.relators[r])) != 0)
          fail("internal", "induced generator map is not a homomorphism");
      std::vector<bool> seen(static_cast<size_t>(n_tgt), false);
      std::deque<int> queue{0};
      seen[0] = true;
      int hit = 1;
      while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (const Word& img : s.edge_image) {
          for (const Word& step : {img, word_inverse(img)}) {
            int d = e_tgt.table.trace(c, step);
            if (!seen[static_cast<size_t>(d)]) {
              seen[static_cast<size_t>(d)] = true;
              ++hit;
              queue.push_back(d);
            }
          }
        }
      }
      if (hit == n_tgt) {
        out.evidence.push_back("pi1 bijective on " + std::to_string(n_tgt) +
                               " enumerated cosets");
      } else {
        out.distinguished = true;
        out.witnesses.push_back(Witness{"pi1", "surjectivity", -1,
                                        "image subgroup of order " + std::to_string(hit),
                                        "group of order " + std::to_string(n_tgt)});
      }
    }
  } else {
    out.evidence.push_back(std::string("todd-coxeter inconclusive (") +
                           (e_src.completed ? "source order " + std::to_string(e_src.table.size())
                                            : "source exhausted") +
                           ", " +
                           (e_tgt.completed ? "target order " + std::to_string(e_tgt.table.size())
                                            : "target exhausted") +
                           ")");
  }
  return out;
}

PartialVerdict compare_local_homology(const SimplicialMap& f, const PiModule& m_target,
                                      const std::string& label, int up_to) {
  Sides s = split_map(f);
  auto issues = validate_module(m_target, s.p_tgt);
  if (!issues.empty()) fail("rejected", "invalid module action: " + issues.front());
  PiModule m_src = restrict_module(s, m_target);

  DgCoalgebra ca = normalized_chains(s.src);
  DgCoalgebra cb = normalized_chains(s.tgt);
  ChainComplex ta = twisted_tensor(ca, m_src, s.p_src);
  ChainComplex tb = twisted_tensor(cb, m_target, s.p_tgt);
  ChainMap fm = induced_chain_map(f);
  ChainMap twisted_f;
  int top = std::max(ca.top(), cb.top());
  for (int n = 0; n <= top; ++n)
    twisted_f.mats.push_back(
        fm.at(n, ca.complex, cb.complex).kron(IntMatrix::identity(m_target.rank)));

  PartialVerdict out;
  std::vector<FGAbelianGroup> src_groups, tgt_groups;
  for (int n = 0; n <= up_to; ++n) {
    HomologyMap h = induced_map_on_homology(ta, tb, twisted_f, n);
    src_groups.push_back(h.source);
    tgt_groups.push_back(h.target);
    if (!h.iso && !out.distinguished) {
      out.distinguished = true;
      out.witnesses.push_back(
          Witness{"local-homology", label, n, h.source.str(), h.target.str()});
    }
  }
  if (!out.distinguished)
    out.evidence.push_back("H(-;" + label + ") " + groups_str(src_groups) + " on both sides");
  return out;
}

PartialVerdict compare_local_homology_regular(const SimplicialMap& f, int up_to, int tc_budget) {
  Sides s = split_map(f);
  PartialVerdict out;
  EnumerationResult e_src = todd_coxeter(s.p_src, tc_budget);
  EnumerationResult e_tgt = todd_coxeter(s.p_tgt, tc_budget);
  if (!e_src.completed || !e_tgt.completed) {
    out.evidence.push_back("regular comparison unavailable (enumeration exhausted)");
    return out;
  }
  std::vector<FGAbelianGroup> h_src =
      local_homology(s.src, regular_module(e_src.table), up_to);
  std::vector<FGAbelianGroup> h_tgt =
      local_homology(s.tgt, regular_module(e_tgt.table), up_to);
  for (int n = 0; n <= up_to; ++n) {
    if (h_src[static_cast<size_t>(n)] == h_tgt[static_cast<size_t>(n)]) continue;
    out.distinguished = true;
    out.witnesses.push_back(Witness{"local-homology", "regular", n,
                                    h_src[static_cast<size_t>(n)].str(),
                                    h_tgt[static_cast<size_t>(n)].str()});
    break;
  }
  if (!out.distinguished)
    out.evidence.push_back("H(-;Z[pi]) " + groups_str(h_src) + " on both sides");
  return out;
}

Verdict whitehead_verdict(const SimplicialMap& f, const DetectConfig& cfg) {
  if (cfg.up_to < 1) fail("rejected", "up_to must be >= 1");
  Verdict v;
  v.depth = cfg.up_to;
  const std::string base = f.to_json().dump();
  auto note = [&](const std::string& check, const std::string& result) {
    v.transcript.push_back(
        {check, fnv1a_hex(base + "|" + check + "|" + std::to_string(cfg.up_to)), result});
  };

  OrdinaryReport ord = ordinary_quasi_iso(f, cfg.up_to);
  if (ord.witness) v.witnesses.push_back(*ord.witness);
  note("ordinary-quasi-iso", ord.iso_up_to ? "iso up to degree " + std::to_string(cfg.up_to)
                                           : "distinguished");

  PartialVerdict pi1 = compare_pi1(f, cfg.tc_budget);
  for (const auto& w : pi1.witnesses) v.witnesses.push_back(w);
  note("compare-pi1", pi1.distinguished ? "distinguished"
                                        : (pi1.evidence.empty() ? "inconclusive"
                                                                : pi1.evidence.front()));

  PartialVerdict reg = compare_local_homology_regular(f, cfg.up_to, cfg.tc_budget);
  for (const auto& w : reg.witnesses) v.witnesses.push_back(w);
  note("compare-local-homology[regular]",
       reg.distinguished ? "distinguished"
                         : (reg.evidence.empty() ? "inconclusive" : reg.evidence.front()));

  for (const auto& [label, module] : cfg.modules) {
    PartialVerdict user = compare_local_homology(f, module, label, cfg.up_to);
    for (const auto& w : user.witnesses) v.witnesses.push_back(w);
    note("compare-local-homology[" + label + "]",
         user.distinguished ? "distinguished"
                            : (user.evidence.empty() ? "inconclusive" : user.evidence.front()));
  }

  v.not_weak_equivalence = !v.witnesses.empty();
  return v;
}

bool replay_witness(const SimplicialMap& f, const Witness& w, const DetectConfig& cfg) {
  if (w.kind == "ordinary-homology") {
    OrdinaryReport ord = ordinary_quasi_iso(f, std::max(cfg.up_to, w.degree));
    if (w.degree < 0 || w.degree >= static_cast<int>(ord.per_degree.size())) return false;
    const HomologyMap& h = ord.per_degree[static_cast<size_t>(w.degree)];
    return !h.iso && h.source.str() == w.source_value && h.target.str() == w.target_value;
  }
  if (w.kind == "pi1") {
    PartialVerdict p = compare_pi1(f, cfg.tc_budget);
    for (const auto& got : p.witnesses)
      if (got == w) return true;
    return false;
  }
  if (w.kind == "local-homology") {
    PartialVerdict p;
    if (w.name == "regular") {
      p = compare_local_homology_regular(f, std::max(cfg.up_to, w.degree), cfg.tc_budget);
    } else {
      for (const auto& [label, module] : cfg.modules)
        if (label == w.name)
          p = compare_local_homology(f, module, label, std::max(cfg.up_to, w.degree));
    }
    for (const auto& got : p.witnesses)
      if (got == w) return true;
    return false;
  }
  return false;
}

}  // namespace topo
