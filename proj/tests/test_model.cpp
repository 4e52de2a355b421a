#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "annealgap/errors.hpp"
#include "annealgap/model.hpp"

using namespace annealgap;

namespace {

// Reference critical points solved independently at 40-digit precision.
struct RefRow {
    int p;
    double gamma_c, m_c;
};
const RefRow kReference[] = {
    {3, 1.2990381057, 0.8660254038},  {5, 1.1346630900, 0.9682458366},
    {7, 1.0873281921, 0.9860132972},  {9, 1.0646688232, 0.9921567416},
    {11, 1.0513590583, 0.9949874371}, {13, 1.0425973236, 0.9965217286},
    {15, 1.0363912400, 0.9974457174}, {17, 1.0317644315, 0.9980449639},
    {19, 1.0281818870, 0.9984555975}, {21, 1.0253258120, 0.9987492178},
    {23, 1.0229955180, 0.9989664080}, {25, 1.0210580220, 0.9991315674},
    {31, 1.0168094701, 0.9994442900},
};

}  // namespace

TEST_CASE("validate_spec accepts in-range parameters") {
    CHECK_NOTHROW(validate_spec({3, 10, 1.0, kZeroT}));
    CHECK_NOTHROW(validate_spec({kPInfinity, 20, 1.0, kZeroT}));
    CHECK_NOTHROW(validate_spec({5, 1, 0.0, 2.0}));
}

TEST_CASE("validate_spec rejects with distinct kinds") {
    auto kind_of = [](const ModelSpec& s) {
        try {
            validate_spec(s);
        } catch (const SpecError& e) {
            return e.kind();
        }
        FAIL("expected SpecError");
        return SpecError::Kind::InvalidSize;
    };
    CHECK(kind_of({2, 10, 1.0, 1.0}) == SpecError::Kind::UnsupportedInteractionOrder);
    CHECK(kind_of({4, 10, 1.0, 1.0}) == SpecError::Kind::UnsupportedInteractionOrder);
    CHECK(kind_of({1, 10, 1.0, 1.0}) == SpecError::Kind::UnsupportedInteractionOrder);
    CHECK(kind_of({3, 0, 1.0, 1.0}) == SpecError::Kind::InvalidSize);
    CHECK(kind_of({3, 10, -0.5, 1.0}) == SpecError::Kind::InvalidField);
    CHECK(kind_of({3, 10, 1.0, -1.0}) == SpecError::Kind::InvalidTemperature);
}

TEST_CASE("ground-state energy density closed forms") {
    CHECK(gs_energy_density(3, 0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(gs_energy_density(3, 0.7, 0.0) == doctest::Approx(-0.7).epsilon(1e-14));
    CHECK(gs_energy_density(3, 1.2991, 0.8660) == doctest::Approx(-1.2991).epsilon(1e-3));
    // Degeneracy identity at the transition, to solver precision.
    for (const auto& r : kReference)
        CHECK(gs_energy_density(r.p, r.gamma_c, r.m_c) ==
              doctest::Approx(-r.gamma_c).epsilon(1e-9));
}

TEST_CASE("critical points match the 40-digit reference to 1e-8") {
    for (const auto& r : kReference) {
        CriticalPoint cp = zero_T_critical_point(r.p);
        CHECK(cp.gamma_c == doctest::Approx(r.gamma_c).epsilon(1e-8));
        CHECK(cp.m_c == doctest::Approx(r.m_c).epsilon(1e-8));
    }
}

TEST_CASE("critical curves are monotone in p") {
    double prev_g = 10.0, prev_m = 0.0;
    for (const auto& r : kReference) {
        CriticalPoint cp = zero_T_critical_point(r.p);
        CHECK(cp.gamma_c < prev_g);
        CHECK(cp.m_c > prev_m);
        prev_g = cp.gamma_c;
        prev_m = cp.m_c;
    }
}

TEST_CASE("large p stays solvable") {
    CriticalPoint cp101 = zero_T_critical_point(101);
    CHECK(cp101.gamma_c == doctest::Approx(1.0050126046).epsilon(1e-8));
    CHECK(cp101.m_c == doctest::Approx(0.9999499987).epsilon(1e-8));
    CHECK(cp101.gamma_c == doctest::Approx(1.0 + 1.0 / 202.0).epsilon(1e-3));
    CHECK(cp101.m_c == doctest::Approx(1.0 - 1.0 / (2.0 * 101 * 101)).epsilon(1e-3));

    CriticalPoint cp1001 = zero_T_critical_point(1001);
    CHECK(cp1001.gamma_c == doctest::Approx(1.0005001251).epsilon(1e-8));
    CHECK(cp1001.m_c == doctest::Approx(0.9999995000).epsilon(1e-8));

    CHECK_THROWS_AS(zero_T_critical_point(1003), SpecError);
    CHECK_THROWS_AS(zero_T_critical_point(6), SpecError);
}

TEST_CASE("asymptotic critical point") {
    CriticalPoint a3 = asymptotic_critical_point(3);
    CHECK(a3.gamma_c == doctest::Approx(1.1667).epsilon(1e-4));
    CHECK(a3.m_c == doctest::Approx(0.9444).epsilon(1e-4));

    CriticalPoint ainf = asymptotic_critical_point(kPInfinity);
    CHECK(ainf.gamma_c == 1.0);
    CHECK(ainf.m_c == 1.0);

    CriticalPoint a25 = asymptotic_critical_point(25);
    CriticalPoint e25 = zero_T_critical_point(25);
    CHECK(std::fabs(a25.gamma_c - e25.gamma_c) <= 0.01);
    CHECK(std::fabs(a25.m_c - e25.m_c) <= 0.01);
}
