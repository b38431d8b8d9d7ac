#include "fareyaf/paths.hpp"
#include "fareyaf/tree.hpp"

#include <gtest/gtest.h>

using namespace farey;
using namespace farey::paths;

namespace {

// xi_0 in {0,1}; |2 xi_n - xi_{n+1}| <= 1
void extend(std::int64_t N, Path& p, std::vector<Path>& out) {
    if (static_cast<std::int64_t>(p.size()) == N + 1) {
        out.push_back(p);
        return;
    }
    std::int64_t n = static_cast<std::int64_t>(p.size()) - 1;
    long long x = p.back();
    for (long long y = 2 * x - 1; y <= 2 * x + 1; ++y) {
        if (y < 0 || y > (1ll << (n + 1))) continue;
        p.push_back(static_cast<std::uint32_t>(y));
        extend(N, p, out);
        p.pop_back();
    }
}

std::vector<Path> bruteForcePaths(std::int64_t N) {
    std::vector<Path> out;
    for (std::uint32_t x0 : {0u, 1u}) {
        Path p{x0};
        extend(N, p, out);
    }
    return out;
}

using Dense = std::vector<std::vector<QuadScalar>>;

Dense dense(const SparseOperator& a) {
    Dense d(a.dim(), std::vector<QuadScalar>(a.dim()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) d[i][j] = a.entry(i, j);
    return d;
}

Dense multiply(const Dense& a, const Dense& b, const QuadField* field) {
    std::size_t n = a.size();
    Dense c(n, std::vector<QuadScalar>(n, QuadScalar(field, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].isZero()) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

}  // namespace

TEST(PathSpace, MatchesBruteForceEnumeration) {
    for (std::int64_t N = 0; N <= 7; ++N) {
        auto expected = bruteForcePaths(N);
        auto got = enumeratePaths(N);
        EXPECT_EQ(got, expected);
        auto space = PathSpace::make(N);
        ASSERT_EQ(space->size(), expected.size());
        EXPECT_EQ(BigInt(space->size()), pow3(N) + 1);
        EXPECT_EQ(space->endpointCounts(), rowDenominators(N));
        for (std::size_t i = 0; i < space->size(); ++i) {
            ASSERT_EQ(space->pathCopy(i), expected[i]);
            ASSERT_EQ(space->indexOf(expected[i]), i);
        }
    }
    EXPECT_EQ(PathSpace::make(0)->size(), 2u);
    EXPECT_EQ(PathSpace::make(2)->endpointCounts(), (std::vector<std::uint64_t>{1, 3, 2, 3, 1}));
    EXPECT_EQ(PathSpace::make(7)->size(), 2188u);
    EXPECT_FALSE(PathSpace::make(2)->indexOf(Path{0, 0, 2}));
    EXPECT_THROW(PathSpace::make(kMaxPathFloor + 1), std::length_error);
}

TEST(PathSpace, Splice) {
    auto s = PathSpace::make(4);
    for (std::size_t i = 0; i < s->size(); i += 7)
        for (std::size_t j = 0; j < s->size(); j += 5) {
            for (std::int64_t r = 0; r <= 4; ++r) {
                if (s->coord(i, r) != s->coord(j, r)) continue;
                auto k = s->splice(i, j, r);
                for (std::int64_t m = 0; m <= r; ++m) EXPECT_EQ(s->coord(k, m), s->coord(i, m));
                for (std::int64_t m = r; m <= 4; ++m) EXPECT_EQ(s->coord(k, m), s->coord(j, m));
            }
        }
}

TEST(Quad, FieldArithmetic) {
    auto two = QuadField::make(2);
    auto s = QuadScalar::sqrtLambda(two.get());
    EXPECT_EQ(s * s, QuadScalar(two.get(), 2));
    QuadScalar x(two.get(), 3, 1);
    EXPECT_EQ(x * x.inverse(), QuadScalar(two.get(), 1));
    EXPECT_EQ(x * x.conj(), QuadScalar(two.get(), 7));
    auto quarter = QuadField::make(Rational(1, 4));
    EXPECT_TRUE(quarter->isEmbedded());
    EXPECT_EQ(QuadScalar::sqrtLambda(quarter.get()), QuadScalar(quarter.get(), Rational(1, 2)));
    EXPECT_EQ(QuadScalar::sqrtLambda(quarter.get()).b(), 0);
    auto plain = QuadField::make(1, false);
    EXPECT_FALSE(plain->isField());
    EXPECT_THROW(QuadScalar(plain.get(), 1, 1).inverse(), std::domain_error);
    EXPECT_THROW(QuadField::make(0), std::domain_error);
    EXPECT_THROW((void)(x == QuadScalar(quarter.get(), 1)), std::logic_error);
}

TEST(Operators, ProductMatchesDenseOracle) {
    GeneratorSet G(3, Rational(2));
    std::vector<const SparseOperator*> ops{&G.e(1), &G.f(2), &G.v(0), &G.v(1), &G.w(1), &G.E(1), &G.F(2)};
    auto vs = G.v(1).adjoint();
    ops.push_back(&vs);
    for (auto* a : ops)
        for (auto* b : ops) {
            auto expected = multiply(dense(*a), dense(*b), G.field().get());
            ASSERT_EQ(dense(*a * *b), expected);
        }
    auto dv = dense(G.v(2));
    auto da = dense(G.v(2).adjoint());
    for (std::size_t i = 0; i < dv.size(); ++i)
        for (std::size_t j = 0; j < dv.size(); ++j) EXPECT_EQ(da[i][j], dv[j][i]);
}

TEST(Operators, BlockStructureIsEnforced) {
    auto space = PathSpace::make(2);
    auto field = QuadField::make(1);
    SparseOperator op(space, field);
    auto a = *space->indexOf(Path{0, 0, 0});
    auto b = *space->indexOf(Path{0, 1, 1});
    EXPECT_THROW(op.set(a, b, op.scalar(1)), std::logic_error);
    auto c = *space->indexOf(Path{1, 1, 1});
    op.set(b, c, op.scalar(1));
    EXPECT_EQ(op.nnz(), 1u);
}

TEST(Generators, EdgeProjections) {
    for (std::int64_t N = 1; N <= 5; ++N) {
        GeneratorSet G(N, Rational(1));
        for (std::int64_t n = 0; n <= N; ++n) {
            EXPECT_EQ(G.e(n) + G.f(n) + G.g(n), G.one());
            EXPECT_TRUE(G.e(n).isProjection());
            EXPECT_TRUE(G.f(n).isProjection());
            EXPECT_TRUE(G.g(n).isProjection());
        }
        EXPECT_TRUE(G.e(0).isZero());
    }
    auto f0 = generator(GenKind::f, 0, 2);
    EXPECT_EQ(f0.trace(), f0.scalar(5));
}

TEST(Generators, FlipsAtFloorOne) {
    auto v0 = flipIsometry(GenKind::v, 0, 1);
    const auto& s = v0.space();
    auto from = *s.indexOf(Path{0, 1});
    auto to = *s.indexOf(Path{1, 1});
    EXPECT_EQ(v0.nnz(), 1u);
    EXPECT_FALSE(v0.entry(to, from).isZero());
    GeneratorSet G(4, Rational(1));
    for (std::int64_t n = 0; n <= 3; ++n) {
        EXPECT_EQ(G.v(n).adjoint() * G.v(n), G.g(n) * G.f(n + 1));
        if (G.has(GenKind::w, n)) {
            EXPECT_TRUE((G.w(n) * G.v(n)).isZero());
        }
    }
    EXPECT_FALSE(G.has(GenKind::w, 0));
    EXPECT_THROW(G.get(GenKind::v, 4), std::out_of_range);
}

TEST(Generators, TemperleyLiebProjections) {
    GeneratorSet G(4, Rational(1));
    EXPECT_EQ(G.tau(), Rational(1, 4));
    for (std::int64_t n = 0; n <= 3; ++n) {
        const auto& v = G.v(n);
        auto vs = v.adjoint();
        auto expected = (vs * v + v + vs + v * vs).scaled(Rational(1, 2));
        EXPECT_EQ(G.E(n), expected);
        EXPECT_EQ(G.E(n), tlProjection(GenKind::E, n, 4, Rational(1)));
        EXPECT_TRUE(G.E(n).isProjection());
        if (n >= 1) {
            EXPECT_TRUE((G.E(n) * G.F(n)).isZero());
        }
    }
    GeneratorSet small(2, Rational(1));
    EXPECT_EQ(small.E(0).rank(), (small.v(0).adjoint() * small.v(0)).rank());
    EXPECT_EQ(GeneratorSet(4, Rational(9)).tau(), Rational(9, 100));
    EXPECT_EQ(GeneratorSet(4, Rational(1, 4)).tau(), Rational(4, 25));
}

TEST(Generators, IrrationalRootProjections) {
    GeneratorSet G(4, Rational(2));
    for (std::int64_t n = 0; n <= 3; ++n) {
        EXPECT_TRUE(G.E(n).isProjection());
        bool hasRootEntry = false;
        for (std::size_t i = 0; i < G.E(n).dim(); ++i)
            for (const auto& [j, x] : G.E(n).row(i)) hasRootEntry = hasRootEntry || x.b() != 0;
        EXPECT_TRUE(hasRootEntry);
    }
}

TEST(Generators, SquareLambdaAgreesWithFieldRepresentation) {
    GeneratorSet embedded(4, Rational(9));
    GeneratorSet formal(4, Rational(9), false);
    for (std::int64_t n = 0; n <= 3; ++n) {
        const auto& a = embedded.E(n);
        const auto& b = formal.E(n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                auto x = a.entry(i, j);
                auto y = b.entry(i, j);
                ASSERT_EQ(x.b(), 0);
                ASSERT_EQ(x.a(), y.a() + 3 * y.b());
            }
    }
}

TEST(Generators, SignFlipChangesOneEntry) {
    GeneratorSet G(4, Rational(1));
    GeneratorSet H(4, Rational(1));
    H.flipSign(GenKind::v, 2, 0);
    auto diff = G.v(2) - H.v(2);
    EXPECT_EQ(diff.nnz(), 1u);
    EXPECT_NE(G.E(2), H.E(2));
    EXPECT_EQ(G.v(1), H.v(1));
}
