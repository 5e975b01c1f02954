#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flagcert/flags.hpp"
#include "flagcert/graph.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

// Balanced blowup of the cyclic triangle: parts of sizes ⌊(n+i)/3⌋, all arcs
// V_i → V_{i+1 mod 3}. Vertices are numbered part by part.
Graph build_Bn(int n);
int blowup_part(int n, int v);
std::vector<int> blowup_part_sizes(int n);

// i(B_n) from the part sizes.
Rational independent_density_Bn(int n);

// Graph induced by a part assignment of pattern vertices.
Graph pattern_graph(const std::vector<int>& parts);

// lim p(G_i, B_n) for every class of iso_table(k), k ≤ 5.
std::vector<Rational> limit_densities_Bn(int k);

// Polynomial in ε with exact coefficients; coeff(i) multiplies ε^i.
class EpsPolynomial {
 public:
  EpsPolynomial() = default;
  explicit EpsPolynomial(std::vector<Rational> coeffs);
  static EpsPolynomial constant(const Rational& c);
  static EpsPolynomial eps();          // ε
  static EpsPolynomial one_minus_eps();  // 1 − ε

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Smallest power with a nonzero coefficient; -1 for the zero polynomial.
  int order() const;
  Rational eval(const Rational& e) const;

  EpsPolynomial& operator+=(const EpsPolynomial& o);
  friend EpsPolynomial operator+(EpsPolynomial a, const EpsPolynomial& b) { return a += b; }
  friend EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b);
  friend EpsPolynomial operator*(const Rational& s, const EpsPolynomial& p);
  friend bool operator==(const EpsPolynomial& a, const EpsPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

EpsPolynomial pow(const EpsPolynomial& p, int e);

// lim_{n→∞} E p(G_i, B_n^ε), where B_n^ε deletes each arc independently with
// probability ε. Indexed by class id of iso_table(k), k ≤ 4.
std::vector<EpsPolynomial> expected_densities_Bn_eps(int k);

// Rooted-vector limit for one part assignment of the roots. Root pairs listed
// in `deleted` lose their pattern arc; petals are uniform over the parts.
Vec<Rational> limit_rooted_vector(const FlagBlock& block, const std::vector<int>& root_parts,
                                  const std::vector<std::pair<int, int>>& deleted = {});

// Average over all root part assignments that induce the type.
Vec<Rational> blowup_average_vector(const FlagBlock& block);

struct KernelVector {
  std::string type;    // type name of the block
  int block = 0;       // index in the family
  std::string origin;  // "blowup", "deleted-edge", "deleted-edge-reversed"
  Vec<Rational> vector;
};

// Flag relabeling induced by reversing every arc (only for types that are
// mapped to themselves). perm[i] is the index of the reverse of flag i.
std::vector<int> reversal_permutation(const FlagBlock& block);

// The five kernel vectors of the main family: one B_n limit per type, and the
// ε→0 limit of deleted-edge Ē-rootings with its reversed twin. Vectors are
// scaled to primitive integer form.
std::vector<KernelVector> limit_rooted_vectors(const FlagFamily& family);

// Three partial matchings between (V0,V1), (V1,V2), (V2,V0) of B_n; each pair
// is (tail in V_i, head in V_{i+1}).
struct MatchingTriple {
  std::vector<std::pair<int, int>> m[3];
};

// Throws std::invalid_argument unless the matchings are valid for B_n and
// their union is triangle free.
void validate_matching_triple(int n, const MatchingTriple& m);
Graph build_En_member(int n, const MatchingTriple& m);
MatchingTriple random_matching_triple(int n, std::mt19937_64& rng);

// Vertex i has arcs to i+s mod n for every step s.
Graph circulant(int n, const std::vector<int>& steps);

// Finite B_n^ε sample, for demonstrations only.
Graph sample_Bn_eps(int n, double eps, std::uint64_t seed);

// {"kind":"blowup","n":..}, {"kind":"circulant","n":..,"steps":[..]},
// {"kind":"en","n":..,"matchings":[[[u,v],..],[..],[..]]}
Graph build_construction(const nlohmann::json& spec);

}  // namespace flagcert
