#include "fareyaf/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace farey::paths {

namespace {

// successors of x (floor n-1) on floor n; x = 0 at n = 0 stands for star
void successors(std::int64_t n, std::uint32_t x, std::uint32_t out[3], int& count) {
    std::int64_t last = std::int64_t{1} << n;
    count = 0;
    for (std::int64_t c = 2 * std::int64_t(x) - 1; c <= 2 * std::int64_t(x) + 1; ++c)
        if (c >= 0 && c <= last) out[count++] = static_cast<std::uint32_t>(c);
}

}  // namespace

std::shared_ptr<const PathSpace> PathSpace::make(std::int64_t N) {
    return std::shared_ptr<const PathSpace>(new PathSpace(N));
}

PathSpace::PathSpace(std::int64_t N) : N_(N) {
    if (N < 0) throw std::out_of_range("path floor must be >= 0");
    if (N > kMaxPathFloor) throw std::length_error("path floor " + std::to_string(N) + " exceeds guard " + std::to_string(kMaxPathFloor));
    cont_.resize(N + 1);
    for (std::int64_t n = N; n >= 0; --n) {
        cont_[n].assign((std::size_t{1} << n) + 1, 0);
        for (std::uint32_t x = 0; x < cont_[n].size(); ++x) {
            if (n == N) {
                cont_[n][x] = 1;
                continue;
            }
            std::uint32_t ch[3];
            int c;
            successors(n + 1, x, ch, c);
            for (int i = 0; i < c; ++i) cont_[n][x] += cont_[n + 1][ch[i]];
        }
    }
    count_ = cont_[0][0] + cont_[0][1];
    coords_.reserve(count_ * stride());
    Path cur(stride());
    std::function<void(std::int64_t, std::uint32_t)> walk = [&](std::int64_t n, std::uint32_t parent) {
        std::uint32_t ch[3];
        int c;
        successors(n, parent, ch, c);
        for (int i = 0; i < c; ++i) {
            cur[n] = ch[i];
            if (n == N_)
                coords_.insert(coords_.end(), cur.begin(), cur.end());
            else
                walk(n + 1, ch[i]);
        }
    };
    walk(0, 0);
}

Path PathSpace::pathCopy(std::size_t i) const {
    auto p = path(i);
    return Path(p.begin(), p.end());
}

std::optional<std::size_t> PathSpace::indexOf(std::span<const std::uint32_t> coords) const {
    if (coords.size() != stride()) return std::nullopt;
    std::size_t rank = 0;
    std::uint32_t parent = 0;
    for (std::int64_t n = 0; n <= N_; ++n) {
        std::uint32_t ch[3];
        int c;
        successors(n, parent, ch, c);
        bool found = false;
        for (int i = 0; i < c; ++i) {
            if (ch[i] < coords[n])
                rank += cont_[n][ch[i]];
            else if (ch[i] == coords[n])
                found = true;
        }
        if (!found) return std::nullopt;
        parent = coords[n];
    }
    return rank;
}

std::size_t PathSpace::splice(std::size_t prefixOf, std::size_t tailOf, std::int64_t r) const {
    if (coord(prefixOf, r) != coord(tailOf, r)) throw std::logic_error("splice of paths through different vertices");
    Path p = pathCopy(tailOf);
    for (std::int64_t n = 0; n <= r; ++n) p[n] = coord(prefixOf, n);
    return *indexOf(p);
}

std::vector<std::uint64_t> PathSpace::endpointCounts() const {
    std::vector<std::uint64_t> counts((std::size_t{1} << N_) + 1, 0);
    for (std::size_t i = 0; i < count_; ++i) ++counts[endpoint(i)];
    return counts;
}

std::string PathSpace::pathString(std::size_t i) const {
    std::string s = "(";
    for (std::int64_t n = 0; n <= N_; ++n) s += (n ? "," : "") + std::to_string(coord(i, n));
    return s + ")";
}

std::vector<Path> enumeratePaths(std::int64_t N) {
    auto space = PathSpace::make(N);
    std::vector<Path> out;
    out.reserve(space->size());
    for (std::size_t i = 0; i < space->size(); ++i) out.push_back(space->pathCopy(i));
    return out;
}

SparseOperator::SparseOperator(std::shared_ptr<const PathSpace> space, std::shared_ptr<const QuadField> field)
    : space_(std::move(space)), field_(std::move(field)), rows_(space_->size()) {}

SparseOperator SparseOperator::identity(std::shared_ptr<const PathSpace> space, std::shared_ptr<const QuadField> field) {
    return diagonal(std::move(space), std::move(field), [](std::size_t) { return true; });
}

SparseOperator SparseOperator::diagonal(std::shared_ptr<const PathSpace> space, std::shared_ptr<const QuadField> field,
                                        const std::function<bool(std::size_t)>& selected) {
    SparseOperator op(std::move(space), std::move(field));
    for (std::size_t i = 0; i < op.dim(); ++i)
        if (selected(i)) op.rows_[i].emplace_back(static_cast<std::uint32_t>(i), op.scalar(1));
    return op;
}

void SparseOperator::requireCompatible(const SparseOperator& o) const {
    if (space_ != o.space_ && space_->floor() != o.space_->floor()) throw std::logic_error("operators on different path spaces");
    if (field_ != o.field_ && (field_->lambda() != o.field_->lambda() || field_->isEmbedded() != o.field_->isEmbedded()))
        throw std::logic_error("operators over different scalar fields");
}

void SparseOperator::set(std::size_t row, std::size_t col, const QuadScalar& value) {
    if (row >= dim() || col >= dim()) throw std::out_of_range("operator index out of range");
    if (space_->endpoint(row) != space_->endpoint(col))
        throw std::logic_error("entry " + space_->pathString(row) + " <- " + space_->pathString(col) + " crosses endpoint blocks");
    auto& r = rows_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const Entry& e, std::size_t c) { return e.first < c; });
    QuadScalar v(field_.get(), value.a(), value.b());
    if (it != r.end() && it->first == col) {
        if (v.isZero())
            r.erase(it);
        else
            it->second = v;
    } else if (!v.isZero()) {
        r.insert(it, Entry{static_cast<std::uint32_t>(col), v});
    }
}

QuadScalar SparseOperator::entry(std::size_t row, std::size_t col) const {
    const auto& r = rows_.at(row);
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == col) return it->second;
    return scalar(0);
}

std::size_t SparseOperator::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

SparseOperator SparseOperator::adjoint() const {
    // entries are real, so the adjoint is the transpose
    SparseOperator out(space_, field_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (const auto& [j, v] : rows_[i]) out.rows_[j].emplace_back(static_cast<std::uint32_t>(i), v);
    return out;
}

namespace {

std::vector<SparseOperator::Entry> mergeRows(const std::vector<SparseOperator::Entry>& a, const std::vector<SparseOperator::Entry>& b,
                                             bool subtract) {
    std::vector<SparseOperator::Entry> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            QuadScalar v = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!v.isZero()) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
    requireCompatible(o);
    SparseOperator out(space_, field_);
    for (std::size_t i = 0; i < dim(); ++i) out.rows_[i] = mergeRows(rows_[i], o.rows_[i], false);
    return out;
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
    requireCompatible(o);
    SparseOperator out(space_, field_);
    for (std::size_t i = 0; i < dim(); ++i) out.rows_[i] = mergeRows(rows_[i], o.rows_[i], true);
    return out;
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
    requireCompatible(o);
    SparseOperator out(space_, field_);
    std::vector<QuadScalar> acc(dim());
    std::vector<char> used(dim(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < dim(); ++i) {
        touched.clear();
        for (const auto& [k, a] : rows_[i]) {
            for (const auto& [j, b] : o.rows_[k]) {
                if (!used[j]) {
                    used[j] = 1;
                    touched.push_back(j);
                    acc[j] = a * b;
                } else {
                    acc[j] += a * b;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& r = out.rows_[i];
        for (auto j : touched) {
            used[j] = 0;
            if (acc[j].isZero()) continue;
            if (space_->endpoint(i) != space_->endpoint(j))
                throw std::logic_error("product left the endpoint blocks at " + space_->pathString(i));
            r.emplace_back(j, acc[j]);
        }
    }
    return out;
}

SparseOperator SparseOperator::scaled(const QuadScalar& c) const {
    SparseOperator out(space_, field_);
    if (c.isZero()) return out;
    for (std::size_t i = 0; i < dim(); ++i) {
        out.rows_[i].reserve(rows_[i].size());
        for (const auto& [j, v] : rows_[i]) {
            QuadScalar x = v * c;
            if (!x.isZero()) out.rows_[i].emplace_back(j, x);
        }
    }
    return out;
}

QuadScalar SparseOperator::trace() const {
    QuadScalar t = scalar(0);
    for (std::size_t i = 0; i < dim(); ++i) t += entry(i, i);
    return t;
}

std::size_t SparseOperator::rank() const {
    std::map<std::uint32_t, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < dim(); ++i) blocks[space_->endpoint(i)].push_back(i);
    std::size_t total = 0;
    for (const auto& [endpoint, idx] : blocks) {
        std::size_t m = idx.size();
        std::vector<std::vector<QuadScalar>> a(m, std::vector<QuadScalar>(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) a[r][c] = entry(idx[r], idx[c]);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < m && rank < m; ++c) {
            std::size_t pivot = rank;
            while (pivot < m && a[pivot][c].isZero()) ++pivot;
            if (pivot == m) continue;
            std::swap(a[pivot], a[rank]);
            QuadScalar inv = a[rank][c].inverse();
            for (std::size_t r = 0; r < m; ++r) {
                if (r == rank || a[r][c].isZero()) continue;
                QuadScalar factor = a[r][c] * inv;
                for (std::size_t k = c; k < m; ++k) a[r][k] -= factor * a[rank][k];
            }
            ++rank;
        }
        total += rank;
    }
    return total;
}

bool SparseOperator::isProjection() const { return (*this) * (*this) == *this && adjoint() == *this; }

std::optional<Witness> SparseOperator::firstDifference(const SparseOperator& expected) const {
    requireCompatible(expected);
    for (std::size_t i = 0; i < dim(); ++i) {
        auto diff = mergeRows(rows_[i], expected.rows_[i], true);
        if (diff.empty()) continue;
        std::size_t j = diff.front().first;
        return Witness{i, j, space_->pathString(i), space_->pathString(j), entry(i, j).str(), expected.entry(i, j).str()};
    }
    return std::nullopt;
}

std::pair<std::size_t, std::size_t> SparseOperator::entryPosition(std::size_t ordinal) const {
    for (std::size_t i = 0; i < dim(); ++i) {
        if (ordinal < rows_[i].size()) return {i, rows_[i][ordinal].first};
        ordinal -= rows_[i].size();
    }
    throw std::out_of_range("entry ordinal beyond the number of stored entries");
}

std::string toString(GenKind k) {
    switch (k) {
        case GenKind::e: return "e";
        case GenKind::f: return "f";
        case GenKind::g: return "g";
        case GenKind::v: return "v";
        case GenKind::w: return "w";
        case GenKind::E: return "E";
        case GenKind::F: return "F";
    }
    return "?";
}

GenKind parseGenKind(const std::string& text) {
    for (GenKind k : {GenKind::e, GenKind::f, GenKind::g, GenKind::v, GenKind::w, GenKind::E, GenKind::F})
        if (toString(k) == text) return k;
    throw std::invalid_argument("unknown generator kind '" + text + "'");
}

SparseOperator generator(GenKind kind, std::int64_t n, std::shared_ptr<const PathSpace> space, std::shared_ptr<const QuadField> field) {
    std::int64_t N = space->floor();
    if (n < 0 || n > N) throw std::out_of_range(toString(kind) + "_" + std::to_string(n) + " needs 0 <= n <= " + std::to_string(N));
    int shift;
    switch (kind) {
        case GenKind::e: shift = -1; break;
        case GenKind::f: shift = 1; break;
        case GenKind::g: shift = 0; break;
        default: throw std::invalid_argument("generator() builds e, f or g");
    }
    const PathSpace& s = *space;
    return SparseOperator::diagonal(space, field, [&](std::size_t i) {
        return std::int64_t(s.coord(i, n)) == 2 * std::int64_t(s.coord(i, n - 1)) + shift;
    });
}

SparseOperator generator(GenKind kind, std::int64_t n, std::int64_t N) {
    return generator(kind, n, PathSpace::make(N), QuadField::make(1));
}

SparseOperator flipIsometry(GenKind kind, std::int64_t n, std::shared_ptr<const PathSpace> space, std::shared_ptr<const QuadField> field) {
    std::int64_t N = space->floor();
    if (kind != GenKind::v && kind != GenKind::w) throw std::invalid_argument("flipIsometry builds v or w");
    std::int64_t lo = kind == GenKind::v ? 0 : 1;
    if (n < lo || n > N - 1)
        throw std::out_of_range(toString(kind) + "_" + std::to_string(n) + " needs " + std::to_string(lo) + " <= n <= N-1 = " + std::to_string(N - 1));
    SparseOperator op(space, field);
    const PathSpace& s = *space;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::int64_t a = s.coord(i, n - 1);
        std::int64_t target = kind == GenKind::v ? 4 * a + 1 : 4 * a - 1;
        if (s.coord(i, n) != 2 * a || std::int64_t(s.coord(i, n + 1)) != target) continue;
        Path p = s.pathCopy(i);
        p[n] = static_cast<std::uint32_t>(kind == GenKind::v ? 2 * a + 1 : 2 * a - 1);
        op.set(*s.indexOf(p), i, op.scalar(1));
    }
    return op;
}

SparseOperator flipIsometry(GenKind kind, std::int64_t n, std::int64_t N) {
    return flipIsometry(kind, n, PathSpace::make(N), QuadField::make(1));
}

namespace {

SparseOperator projectionFrom(const SparseOperator& a) {
    const QuadField* f = a.fieldPtr().get();
    const Rational& lambda = f->lambda();
    SparseOperator as = a.adjoint();
    QuadScalar s = QuadScalar::sqrtLambda(f);
    SparseOperator sum = as * a + a.scaled(s) + as.scaled(s) + (a * as).scaled(lambda);
    return sum.scaled(Rational(1) / (1 + lambda));
}

}  // namespace

SparseOperator tlProjection(GenKind kind, std::int64_t n, std::int64_t N, const Rational& lambda) {
    if (lambda <= 0) throw std::domain_error("lambda must be positive");
    auto space = PathSpace::make(N);
    auto field = QuadField::make(lambda);
    if (kind == GenKind::E) return projectionFrom(flipIsometry(GenKind::v, n, space, field));
    if (kind == GenKind::F) return projectionFrom(flipIsometry(GenKind::w, n, space, field));
    throw std::invalid_argument("tlProjection builds E or F");
}

GeneratorSet::GeneratorSet(std::int64_t N, const Rational& lambda, bool embedSquares)
    : N_(N), space_(PathSpace::make(N)), field_(QuadField::make(lambda, embedSquares)) {
    for (GenKind k : {GenKind::e, GenKind::f, GenKind::g})
        for (std::int64_t n = minIndex(k); n <= maxIndex(k); ++n) ops_.emplace(std::make_pair(k, n), generator(k, n, space_, field_));
    for (GenKind k : {GenKind::v, GenKind::w})
        for (std::int64_t n = minIndex(k); n <= maxIndex(k); ++n) ops_.emplace(std::make_pair(k, n), flipIsometry(k, n, space_, field_));
    rebuildProjections();
}

Rational GeneratorSet::tau() const { return lambda() / ((1 + lambda()) * (1 + lambda())); }

std::int64_t GeneratorSet::minIndex(GenKind kind) const {
    return (kind == GenKind::w || kind == GenKind::F) ? 1 : 0;
}

std::int64_t GeneratorSet::maxIndex(GenKind kind) const {
    switch (kind) {
        case GenKind::e:
        case GenKind::f:
        case GenKind::g: return N_;
        default: return N_ - 1;
    }
}

bool GeneratorSet::has(GenKind kind, std::int64_t n) const { return n >= minIndex(kind) && n <= maxIndex(kind); }

const SparseOperator& GeneratorSet::get(GenKind kind, std::int64_t n) const {
    auto it = ops_.find({kind, n});
    if (it == ops_.end()) throw std::out_of_range(toString(kind) + "_" + std::to_string(n) + " is not defined at floor " + std::to_string(N_));
    return it->second;
}

void GeneratorSet::rebuildProjections() {
    for (std::int64_t n = minIndex(GenKind::E); n <= maxIndex(GenKind::E); ++n)
        ops_.insert_or_assign(std::make_pair(GenKind::E, n), projectionFrom(v(n)));
    for (std::int64_t n = minIndex(GenKind::F); n <= maxIndex(GenKind::F); ++n)
        ops_.insert_or_assign(std::make_pair(GenKind::F, n), projectionFrom(w(n)));
}

void GeneratorSet::flipSign(GenKind kind, std::int64_t n, std::size_t ordinal) {
    if (kind == GenKind::E || kind == GenKind::F) throw std::invalid_argument("mutate the base generators, not E/F");
    auto it = ops_.find({kind, n});
    if (it == ops_.end()) throw std::out_of_range("no such generator");
    auto [r, c] = it->second.entryPosition(ordinal);
    it->second.set(r, c, -it->second.entry(r, c));
    rebuildProjections();
}

}  // namespace farey::paths
