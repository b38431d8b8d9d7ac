#pragma once

#include "fareyaf/quad.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace farey::paths {

// xi_0..xi_N; xi_{-1} is the star vertex, taken as coordinate 0.
using Path = std::vector<std::uint32_t>;

inline constexpr std::int64_t kMaxPathFloor = 9;

// Monotone paths from star to floor N in lexicographic order.
class PathSpace {
public:
    static std::shared_ptr<const PathSpace> make(std::int64_t N);

    std::int64_t floor() const { return N_; }
    std::size_t size() const { return count_; }
    std::span<const std::uint32_t> path(std::size_t i) const { return {coords_.data() + i * stride(), stride()}; }
    Path pathCopy(std::size_t i) const;
    // xi_n for -1 <= n <= N
    std::uint32_t coord(std::size_t i, std::int64_t n) const { return n < 0 ? 0 : coords_[i * stride() + n]; }
    std::uint32_t endpoint(std::size_t i) const { return coord(i, N_); }
    std::optional<std::size_t> indexOf(std::span<const std::uint32_t> coords) const;
    // Path with xi_0..xi_r from `prefixOf` and xi_r..xi_N from `tailOf`; requires equal xi_r.
    std::size_t splice(std::size_t prefixOf, std::size_t tailOf, std::int64_t r) const;
    std::vector<std::uint64_t> endpointCounts() const;
    std::string pathString(std::size_t i) const;

private:
    explicit PathSpace(std::int64_t N);
    std::size_t stride() const { return static_cast<std::size_t>(N_ + 1); }
    std::uint64_t continuations(std::int64_t n, std::uint32_t x) const { return cont_[n][x]; }

    std::int64_t N_;
    std::size_t count_ = 0;
    std::vector<std::uint32_t> coords_;
    std::vector<std::vector<std::uint64_t>> cont_;
};

std::vector<Path> enumeratePaths(std::int64_t N);

struct Witness {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string rowPath;
    std::string colPath;
    std::string value;
    std::string expected;
};

// Block-sparse operator on C[paths]; nonzero entries only between paths with a common endpoint.
class SparseOperator {
public:
    using Entry = std::pair<std::uint32_t, QuadScalar>;

    SparseOperator(std::shared_ptr<const PathSpace> space, std::shared_ptr<const QuadField> field);

    static SparseOperator identity(std::shared_ptr<const PathSpace> space, std::shared_ptr<const QuadField> field);
    static SparseOperator diagonal(std::shared_ptr<const PathSpace> space, std::shared_ptr<const QuadField> field,
                                   const std::function<bool(std::size_t)>& selected);

    std::size_t dim() const { return rows_.size(); }
    const PathSpace& space() const { return *space_; }
    const std::shared_ptr<const PathSpace>& spacePtr() const { return space_; }
    const std::shared_ptr<const QuadField>& fieldPtr() const { return field_; }
    QuadScalar scalar(const Rational& a, const Rational& b = 0) const { return QuadScalar(field_.get(), a, b); }

    // Throws std::logic_error if row and column paths end at different vertices.
    void set(std::size_t row, std::size_t col, const QuadScalar& value);
    QuadScalar entry(std::size_t row, std::size_t col) const;
    const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }
    std::size_t nnz() const;
    bool isZero() const { return nnz() == 0; }

    SparseOperator adjoint() const;
    SparseOperator operator+(const SparseOperator& o) const;
    SparseOperator operator-(const SparseOperator& o) const;
    SparseOperator operator*(const SparseOperator& o) const;
    SparseOperator scaled(const QuadScalar& c) const;
    SparseOperator scaled(const Rational& c) const { return scaled(scalar(c)); }
    QuadScalar trace() const;
    // Exact elimination block by block; needs Q(s) to be a field.
    std::size_t rank() const;
    bool isProjection() const;

    std::optional<Witness> firstDifference(const SparseOperator& expected) const;
    friend bool operator==(const SparseOperator& a, const SparseOperator& b) { return !a.firstDifference(b); }

    // n-th stored nonzero entry in row-major order
    std::pair<std::size_t, std::size_t> entryPosition(std::size_t ordinal) const;

private:
    void requireCompatible(const SparseOperator& o) const;

    std::shared_ptr<const PathSpace> space_;
    std::shared_ptr<const QuadField> field_;
    std::vector<std::vector<Entry>> rows_;
};

enum class GenKind { e, f, g, v, w, E, F };
std::string toString(GenKind k);
GenKind parseGenKind(const std::string& text);

// e_n, f_n, g_n: diagonal edge projections (e_0 = 0).
SparseOperator generator(GenKind kind, std::int64_t n, std::shared_ptr<const PathSpace> space,
                         std::shared_ptr<const QuadField> field);
SparseOperator generator(GenKind kind, std::int64_t n, std::int64_t N);
// v_n, w_n: diamond flips.
SparseOperator flipIsometry(GenKind kind, std::int64_t n, std::shared_ptr<const PathSpace> space,
                            std::shared_ptr<const QuadField> field);
SparseOperator flipIsometry(GenKind kind, std::int64_t n, std::int64_t N);
// (a* a + s a + s a* + lambda a a*) / (1 + lambda) for a = v_n or w_n.
SparseOperator tlProjection(GenKind kind, std::int64_t n, std::int64_t N, const Rational& lambda);

// All generators at floor N for one lambda, built once and shared by the suites.
class GeneratorSet {
public:
    GeneratorSet(std::int64_t N, const Rational& lambda, bool embedSquares = true);

    std::int64_t floor() const { return N_; }
    const Rational& lambda() const { return field_->lambda(); }
    Rational tau() const;
    const std::shared_ptr<const PathSpace>& space() const { return space_; }
    const std::shared_ptr<const QuadField>& field() const { return field_; }

    bool has(GenKind kind, std::int64_t n) const;
    const SparseOperator& get(GenKind kind, std::int64_t n) const;
    const SparseOperator& e(std::int64_t n) const { return get(GenKind::e, n); }
    const SparseOperator& f(std::int64_t n) const { return get(GenKind::f, n); }
    const SparseOperator& g(std::int64_t n) const { return get(GenKind::g, n); }
    const SparseOperator& v(std::int64_t n) const { return get(GenKind::v, n); }
    const SparseOperator& w(std::int64_t n) const { return get(GenKind::w, n); }
    const SparseOperator& E(std::int64_t n) const { return get(GenKind::E, n); }
    const SparseOperator& F(std::int64_t n) const { return get(GenKind::F, n); }
    SparseOperator one() const { return SparseOperator::identity(space_, field_); }

    // Index ranges: e 0..N, f,g 0..N, v 0..N-1, w 1..N-1, E 0..N-1, F 1..N-1.
    std::int64_t minIndex(GenKind kind) const;
    std::int64_t maxIndex(GenKind kind) const;

    // Negates one stored entry of a base generator and rebuilds E/F.
    void flipSign(GenKind kind, std::int64_t n, std::size_t ordinal);

private:
    void rebuildProjections();

    std::int64_t N_;
    std::shared_ptr<const PathSpace> space_;
    std::shared_ptr<const QuadField> field_;
    std::map<std::pair<GenKind, std::int64_t>, SparseOperator> ops_;
};

}  // namespace farey::paths
