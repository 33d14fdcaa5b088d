#pragma once

#include "thl/bigint.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace thl {

enum class BaseSeries { A, E8, Explicit };

std::string to_string(BaseSeries b);

// Cartan matrix with signed node ids.  matrix[i][j] = <alpha_j, alpha_i^vee>
// for the nodes at positions i, j, so the labels of alpha_j are column j.
struct CartanSpec {
    std::vector<int> nodes;
    std::vector<std::vector<int>> matrix;
    std::vector<Rational> symmetrizer;
    std::optional<int> fermionic_node;
    BaseSeries base = BaseSeries::Explicit;
    int r = 0;
    int n = 0;

    int size() const { return int(nodes.size()); }
    int index(int id) const;
    bool has_node(int id) const;
    int entry(int row_id, int col_id) const;
    bool is_bosonic(int id) const { return !fermionic_node || *fermionic_node != id; }
    std::vector<int> bosonic_nodes() const;
    CartanSpec bosonic_part() const;
    CartanSpec permuted(const std::vector<int>& order) const;
    std::string id() const;

    nlohmann::json to_json() const;
    static CartanSpec from_json(const nlohmann::json& j);
    bool operator==(const CartanSpec& o) const;
};

CartanSpec build_cartan(BaseSeries base, int r, int n, bool super);
CartanSpec explicit_cartan(const std::vector<int>& nodes, const std::vector<std::vector<int>>& matrix,
                           std::optional<int> fermionic_node = std::nullopt);
// Throws std::invalid_argument describing the first violated invariant.
void validate(const CartanSpec& spec);

BigInt determinant(const CartanSpec& spec);

enum class Basis { Fundamental, SimpleRoot };

struct WeightVector {
    std::vector<Rational> coeffs;
    Basis basis = Basis::Fundamental;

    static WeightVector fundamental(const std::vector<long long>& labels);
    static WeightVector root(const std::vector<long long>& coeffs);
    bool operator==(const WeightVector& o) const { return basis == o.basis && coeffs == o.coeffs; }
};

WeightVector to_root_basis(const CartanSpec& spec, const WeightVector& x);
WeightVector to_fundamental_basis(const CartanSpec& spec, const WeightVector& x);
Rational inner_product(const CartanSpec& spec, const WeightVector& x, const WeightVector& y);

WeightVector weyl_vector(const CartanSpec& spec);
WeightVector simple_root(const CartanSpec& spec, int id);
WeightVector fundamental_weight(const CartanSpec& spec, int id);
// Primitive positive null vector of a connected affine sub-diagram, in the
// root basis of the full diagram (zero outside the given nodes).
std::vector<long long> null_root(const CartanSpec& spec, const std::vector<int>& affine_nodes);

}  // namespace thl
