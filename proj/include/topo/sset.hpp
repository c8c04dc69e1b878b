#pragma once

#include <map>
#include <string>
#include <vector>

#include "topo/json_util.hpp"

namespace topo {

using SimplexId = std::string;

/// Reference to a possibly degenerate simplex in Eilenberg-Zilber normal
/// form: a strictly decreasing degeneracy word applied to a nondegenerate
/// target. An empty word means the reference is nondegenerate.
struct DegenerateRef {
  std::vector<int> degens;
  SimplexId target;

  bool degenerate() const { return !degens.empty(); }
  bool operator==(const DegenerateRef& rhs) const = default;
  bool operator<(const DegenerateRef& rhs) const {
    return std::tie(degens, target) < std::tie(rhs.degens, rhs.target);
  }
};

struct SimplicialSetData {
  /// Nondegenerate simplex ids per dimension, 0..top_dim.
  std::vector<std::vector<SimplexId>> by_dim;
  /// For each nondegenerate n-simplex with n >= 1, its n+1 faces.
  std::map<SimplexId, std::vector<DegenerateRef>> faces;

  int top_dim() const { return static_cast<int>(by_dim.size()) - 1; }
  int count(int dim) const {
    return (dim < 0 || dim > top_dim()) ? 0 : static_cast<int>(by_dim[static_cast<size_t>(dim)].size());
  }
  bool has(const SimplexId& id) const;
  int dim_of(const SimplexId& id) const;
  /// Position of id inside its dimension's list.
  int index_of(const SimplexId& id) const;
  long long euler_characteristic() const;

  bool operator==(const SimplicialSetData& rhs) const = default;

  Json to_json() const;
  static SimplicialSetData from_json(const Json& j);
};

/// Simplicial set with exactly one 0-simplex.
struct ReducedSimplicialSet {
  SimplicialSetData data;
  const SimplexId& base_vertex() const { return data.by_dim[0][0]; }
};

/// Validates and wraps; throws "rejected" otherwise.
ReducedSimplicialSet make_reduced(SimplicialSetData data);

struct ValidationIssue {
  SimplexId simplex;
  int i = -1, j = -1;  // face indices involved, when applicable
  std::string what;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks identifier integrity, dimension bookkeeping, normal forms and
/// every simplicial identity d_i d_j = d_{j-1} d_i (i < j).
ValidationReport validate(const SimplicialSetData& s);

/// s_k applied to a normal-form degeneracy word.
std::vector<int> insert_degeneracy(std::vector<int> word, int k);

/// d_i applied to a reference, renormalized; i ranges over 0..dim(ref).
DegenerateRef face_of_ref(const SimplicialSetData& s, const DegenerateRef& r, int i);

/// s_k applied to a reference.
DegenerateRef degenerate_ref(DegenerateRef r, int k);

int dim_of_ref(const SimplicialSetData& s, const DegenerateRef& r);

/// Front p-face (vertices 0..p) of a nondegenerate simplex.
DegenerateRef front_face(const SimplicialSetData& s, const SimplexId& id, int p);
/// Back q-face (last q+1 vertices) of a nondegenerate simplex.
DegenerateRef back_face(const SimplicialSetData& s, const SimplexId& id, int q);
/// Part of a simplex spanned by vertices a..b.
DegenerateRef vertex_range_face(const SimplicialSetData& s, const SimplexId& id, int a, int b);

/// Map of simplicial sets: a target reference of equal dimension for every
/// nondegenerate source simplex.
struct SimplicialMap {
  SimplicialSetData source;
  SimplicialSetData target;
  std::map<SimplexId, DegenerateRef> assign;

  Json to_json() const;
};

DegenerateRef apply_map(const SimplicialMap& f, const DegenerateRef& r);

/// Checks dimensions and commutation with every face map.
ValidationReport validate_map(const SimplicialMap& f);

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap identity_map(const SimplicialSetData& s);

}  // namespace topo
