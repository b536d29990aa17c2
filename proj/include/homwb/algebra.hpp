#ifndef HOMWB_ALGEBRA_HPP
#define HOMWB_ALGEBRA_HPP

#include <any>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "homwb/matrix.hpp"

namespace homwb {

struct Quiver {
    struct Arrow {
        std::string label;
        std::size_t src = 0;
        std::size_t tgt = 0;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_index(const std::string& label) const;
};

/// One summand of a relation: coef * (arrows applied first-to-last).
/// In the written function-composition order b*a ("a then b") the stored
/// sequence is {a, b}.
struct RelationTerm {
    Scalar coef;
    std::vector<std::size_t> arrows;
};

struct Relation {
    std::vector<RelationTerm> terms;
};

struct PathAlgebraPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
    Field field;
    std::size_t nilpotency_cap = 8;
};

/// A finite-dimensional associative unital algebra given by structure
/// constants. Immutable after construction; shared via Ptr.
class FDAlgebra : public std::enable_shared_from_this<FDAlgebra> {
public:
    using Ptr = std::shared_ptr<const FDAlgebra>;

    /// Extra bookkeeping kept when the algebra arose from a quiver.
    struct PathInfo {
        Quiver quiver;
        std::vector<std::size_t> path_source;  // per basis element
        std::vector<std::size_t> path_target;
        std::vector<std::size_t> path_length;
        std::vector<Matrix> vertex_idempotents;  // coordinate vectors
    };

    static Ptr create(Field field, std::vector<std::string> labels, std::vector<Matrix> left_mats,
                      Matrix unit, std::optional<Matrix> radical = std::nullopt,
                      std::optional<PathInfo> path_info = std::nullopt, std::string name = "algebra");

    const Field& field() const { return field_; }
    std::size_t dim() const { return left_mats_.size(); }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::string& name() const { return name_; }

    /// L_i with L_i e_j = coordinates of basis_i * basis_j.
    const Matrix& left_mult(std::size_t i) const { return left_mats_[i]; }
    const Matrix& right_mult(std::size_t i) const { return right_mats_[i]; }
    /// Sum_i x_i L_i, the matrix of left multiplication by x.
    Matrix left_mult_of(const Matrix& x) const;
    Matrix right_mult_of(const Matrix& x) const;
    Matrix multiply(const Matrix& x, const Matrix& y) const;

    const Matrix& unit() const { return unit_; }
    /// Columns span the Jacobson radical.
    const Matrix& radical_basis() const { return radical_; }
    /// Indices of a (small) generating subset of the basis; always contains
    /// enough to generate together with the unit.
    const std::vector<std::size_t>& generators() const { return generators_; }

    const std::optional<PathInfo>& path_info() const { return path_info_; }

    /// Opposite algebra; involutive (opposite of opposite is this object).
    Ptr opposite() const;

    /// Per-algebra memo slot used by higher layers (standard modules etc.).
    template <class T>
    const T& memo(const std::string& key, const std::function<T()>& make) const {
        std::unique_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            lock.unlock();
            T value = make();  // compute without holding the lock
            lock.lock();
            it = cache_.find(key);
            if (it == cache_.end()) it = cache_.emplace(key, std::move(value)).first;
        }
        return std::any_cast<const T&>(it->second);
    }

private:
    FDAlgebra() = default;

    Field field_;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Matrix> left_mats_;
    std::vector<Matrix> right_mats_;
    Matrix unit_;
    Matrix radical_;
    std::vector<std::size_t> generators_;
    std::optional<PathInfo> path_info_;

    mutable std::mutex mutex_;
    mutable std::shared_ptr<const FDAlgebra> opposite_;
    mutable std::weak_ptr<const FDAlgebra> opposite_back_;
    mutable std::map<std::string, std::any> cache_;
};

/// Normal-form basis construction by linear elimination on paths of length
/// < nilpotency_cap. Throws on inadmissible or non-composable input.
FDAlgebra::Ptr build_path_algebra(const PathAlgebraPresentation& p);

/// Radical of an abstract structure-constant algebra: trace-form kernel in
/// characteristic zero, the iterated trace-of-p-th-powers chain in
/// characteristic p.
Matrix generic_radical(const Field& field, const std::vector<Matrix>& left_mats);

/// Quotient algebra A/I for a two-sided ideal I (columns of ideal_basis),
/// with the projection (dim(A/I) x dim(A)) and a linear section.
struct QuotientAlgebra {
    FDAlgebra::Ptr algebra;
    Matrix projection;
    Matrix section;
};
QuotientAlgebra quotient_by_ideal(const FDAlgebra::Ptr& a, const Matrix& ideal_basis);

}  // namespace homwb

#endif
