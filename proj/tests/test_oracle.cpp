// Copyright 2026 The qpv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "qpv/fixtures.hpp"
#include "qpv/oracle.hpp"
#include "qpv/termination.hpp"
#include "support/generators.hpp"

using namespace qpv;
using testing::Rng;

namespace {

Program identity_program(Index d, int m) {
    Program p;
    p.dim = d;
    for (int k = 0; k < m; ++k) {
        p.processes.push_back(SuperOperator::identity(d));
        p.process_names.push_back("id" + std::to_string(k + 1));
    }
    p.m0 = ComplexMatrix::Zero(d, d);
    p.m1 = ComplexMatrix::Identity(d, d);
    return p;
}

ComplexMatrix pure_state(Index d, Index i) {
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    rho(i, i) = 1.0;
    return rho;
}

std::set<std::string> as_strings(const std::vector<PathString>& paths) {
    std::set<std::string> out;
    for (const auto& f : paths) out.insert(f.str());
    return out;
}

}  // namespace

TEST_CASE("pi enumeration: single process has no fillers") {
    for (Index d = 1; d <= 4; ++d) {
        const auto pi = enumerate_pi(1, d);
        REQUIRE(pi.size() == 1);
        CHECK(pi.front() == PathString::parse("1"));
    }
}

TEST_CASE("pi enumeration: dimension one leaves no room for fillers") {
    const auto pi = enumerate_pi(2, 1);
    CHECK(as_strings(pi) == std::set<std::string>{"12", "21"});
}

TEST_CASE("pi enumeration: two processes, dimension two") {
    const auto pi = enumerate_pi(2, 2);
    CHECK(as_strings(pi) ==
          std::set<std::string>{"12", "112", "122", "21", "211", "221"});
    CHECK(std::is_sorted(pi.begin(), pi.end()));
    for (const auto& f : pi) CHECK(is_fair_piece(f, 2));
}

TEST_CASE("pi enumeration: expansion counting and dedup") {
    CHECK(pi_expansion_count(2, 3) == 14);
    const auto pi = enumerate_pi(2, 3);
    CHECK(pi.size() == 14);  // no collisions across the two permutations here
    for (const auto& f : pi) {
        CHECK(is_fair_piece(f, 2));
        CHECK(f.length() <= 2 + 1 * 2);  // m + (m-1)(d-1)
    }

    // Three processes do collide: distinct filler decompositions can yield
    // one word, so the deduplicated set is strictly smaller.
    CHECK(pi_expansion_count(3, 2) == 96);
    const auto pi3 = enumerate_pi(3, 2);
    CHECK(pi3.size() < 96);
    const std::set<std::string> unique(as_strings(pi3));
    CHECK(unique.size() == pi3.size());
    for (const auto& f : pi3) CHECK(is_fair_piece(f, 3));
}

TEST_CASE("pi enumeration respects the budget") {
    EnumerationBudget tiny;
    tiny.max_pi_size = 10;
    CHECK_THROWS_AS(enumerate_pi(2, 3, tiny), BudgetExceeded);
}

TEST_CASE("budget guards refuse oversized enumerations") {
    Rng rng(71);
    const Program big_m = testing::random_program(2, 3, rng);
    EnumerationBudget budget;
    budget.max_m = 2;
    CHECK_THROWS_AS(bruteforce_reach(big_m, pure_state(2, 0), budget), BudgetExceeded);

    const Program big_d = testing::random_program(4, 1, rng);
    budget = EnumerationBudget{};
    budget.max_d = 3;
    CHECK_THROWS_AS(bruteforce_reach(big_d, testing::random_density(4, rng, 1), budget),
                    BudgetExceeded);

    budget = EnumerationBudget{};
    budget.max_path_len = 3;
    CHECK_THROWS_AS(bruteforce_urr(testing::random_program(3, 1, rng),
                                   testing::random_density(3, rng, 1), budget),
                    BudgetExceeded);
}

TEST_CASE("bruteforce reach on the trivial programs") {
    const Program id = identity_program(2, 1);
    const Subspace s = bruteforce_reach(id, pure_state(2, 0));
    CHECK(s.dim() == 1);

    Program flip = identity_program(2, 1);
    ComplexMatrix x(2, 2);
    x << 0, 1,
         1, 0;
    flip.processes[0] = SuperOperator::conjugation(x);
    CHECK(bruteforce_reach(flip, pure_state(2, 0)).dim() == 2);
}

TEST_CASE("bruteforce termination under every schedule") {
    Program dead = identity_program(2, 1);
    dead.m0 = ComplexMatrix::Identity(2, 2);
    dead.m1 = ComplexMatrix::Zero(2, 2);
    CHECK(bruteforce_terminates_all(dead, pure_state(2, 0)));
    CHECK(!bruteforce_terminates_all(identity_program(2, 1), pure_state(2, 0)));

    Rng rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        const Index d = 2 + trial % 2;
        const int m = 1 + trial % 3;
        ProgramInstance inst;
        if (trial % 4 == 0) {
            inst = testing::terminating_chain_instance(d, m, rng);
        } else {
            inst.program = testing::random_program(d, m, rng);
            inst.rho0 = testing::random_density(d, rng, 1);
        }
        CHECK(bruteforce_terminates_all(inst.program, inst.rho0) ==
              terminates_all(inst.program, inst.rho0).terminates);
    }
}

TEST_CASE("bruteforce fair termination on the trivial programs") {
    Program dead = identity_program(2, 2);
    dead.m0 = ComplexMatrix::Identity(2, 2);
    dead.m1 = ComplexMatrix::Zero(2, 2);
    CHECK(bruteforce_terminates_fair(dead, pure_state(2, 0)));
    CHECK(!bruteforce_terminates_fair(identity_program(2, 2), pure_state(2, 0)));
}

TEST_CASE("enumerated supports add up to the powered step sum") {
    Rng rng(73);
    const Program p = testing::random_program(3, 2, rng);
    const ComplexVector psi = testing::random_pure_state(3, rng);
    const ComplexMatrix rho0 = psi * psi.adjoint();
    const SuperOperator f = total_superop(p);

    ComplexMatrix powered = rho0;
    for (std::size_t len = 0; len <= 4; ++len) {
        const Subspace joined = bruteforce_reach_window(p, rho0, len, len);
        if (powered.real().trace() > 1e-12)
            CHECK(subspace_eq(joined, support(powered)));
        else
            CHECK(joined.dim() == 0);
        powered = f.apply(powered);
    }
}
