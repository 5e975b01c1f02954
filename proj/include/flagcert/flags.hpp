#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagcert/graph.hpp"
#include "flagcert/matrix.hpp"

namespace flagcert {

// Type σ: a graph whose vertex i carries label i+1.
struct TypeGraph {
  std::string name;
  Graph graph;
  int order() const { return graph.order(); }
};

TypeGraph empty_type(Kind kind = Kind::Oriented);  // ∅
TypeGraph vertex_type(Kind kind = Kind::Oriented); // a single labeled vertex
TypeGraph nonedge_type();                          // Ē
TypeGraph edge_type();                             // E, the edge 1→2

// A flag over `type`: roots[i] is the image of type vertex i in `graph`.
struct Flag {
  TypeGraph type;
  Graph graph;
  std::vector<int> roots;
  int petals() const { return graph.order() - type.order(); }
};

// Flags over one type with a fixed petal count, in canonical order. Stored
// flags have their roots at vertices 0..k-1.
class FlagBlock {
 public:
  FlagBlock(TypeGraph type, int petals);

  const TypeGraph& type() const { return type_; }
  int petals() const { return petals_; }
  int size() const { return static_cast<int>(flags_.size()); }
  const Flag& flag(int i) const { return flags_[static_cast<std::size_t>(i)]; }
  const std::vector<Flag>& flags() const { return flags_; }
  const std::string& canonical(int i) const { return canon_[static_cast<std::size_t>(i)]; }

  // Flag index of the host graph induced on verts = (roots..., petals...).
  int classify(const Graph& host, const int* verts) const;
  int index_of(const Flag& f) const;  // -1 if absent or over another type

 private:
  TypeGraph type_;
  int petals_;
  std::vector<Flag> flags_;
  std::vector<std::string> canon_;
  std::vector<std::int16_t> lookup_;
};

std::vector<Flag> enumerate_flags(const TypeGraph& sigma, int petals);

struct FlagFamily {
  Kind kind = Kind::Oriented;
  std::vector<FlagBlock> blocks;

  std::vector<std::pair<std::string, int>> shape() const;
  int total_flags() const;
  // largest |F1|+|F2|-|σ| over same-type pairs (must not exceed the class order)
  int required_order() const;
};

// [∅ with 2 petals, Ē with 1 petal, E with 1 petal]
FlagFamily main_family();
// single labeled vertex with 1 petal
FlagFamily vertex_family(Kind kind = Kind::Oriented);

nlohmann::json family_manifest(const FlagFamily& family);

// All σ-rootings of g as root tuples (ordered by the tuple).
std::vector<std::vector<int>> rootings(const TypeGraph& sigma, const Graph& g);

// p(F1,F2;G) and p̃(F1,F2;G), straight from the definition. The root map is a
// uniform injection of the type into G; maps that are not rootings contribute 0,
// so a block is scaled by |rootings| / (n)_k relative to averaging over rootings.
Rational p_flag_pair(const Flag& f1, const Flag& f2, const Graph& g);
Rational p_tilde(const Flag& f1, const Flag& f2, const Graph& g);

// A_G and Ã_G; the parallel kernels split the work by rooting.
BlockSymMatrix<Rational> flag_matrix(const FlagFamily& family, const Graph& g);
BlockSymMatrix<Rational> flag_matrix_tilde(const FlagFamily& family, const Graph& g);
BlockSymMatrix<Rational> flag_matrix_serial(const FlagFamily& family, const Graph& g);
BlockSymMatrix<Rational> flag_matrix_tilde_serial(const FlagFamily& family, const Graph& g);

// v_r: p(F, r) for every flag F of the block.
Vec<Rational> rooted_vector(const FlagBlock& block, const Graph& g, const std::vector<int>& rooting);
Vec<Rational> average_rooted_vector(const FlagBlock& block, const Graph& g,
                                    const std::vector<std::vector<int>>& rooting_set);

}  // namespace flagcert
