// Acceptance suite: one line per criterion, exit 0 iff everything holds.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cob/catlib.hpp"
#include "cob/glue.hpp"
#include "cob/monoid.hpp"
#include "cob/tft.hpp"
#include "cob/verify.hpp"

using namespace cob;

namespace {

struct Outcome {
    bool pass;
    std::string note;
};

std::pair<Cobordism, Cobordism> random_pair(Rng& rng, int max_layers,
                                            const std::vector<std::string>& pool,
                                            bool closed) {
    ObjectSig start = closed ? random_closed_object(rng) : random_object(rng);
    Cobordism f = eval_expr(random_expr(rng, start, 1 + (int)rng.below(max_layers), pool));
    Cobordism g = eval_expr(random_expr(rng, f.target, 1 + (int)rng.below(max_layers), pool));
    return {std::move(f), std::move(g)};
}

Outcome suites_pass(const std::vector<std::string>& names) {
    std::ostringstream note;
    bool ok = true;
    std::size_t cases = 0;
    for (const auto& name : names) {
        SuiteReport rep = run_suite(name);
        cases += rep.cases.size();
        if (!rep.ok()) {
            ok = false;
            for (const auto& c : rep.cases)
                if (!c.pass) {
                    note << name << ": " << c.name;
                    if (!c.detail.empty()) note << " [" << c.detail << "]";
                    note << "; ";
                }
        }
    }
    if (ok) note << cases << " cases";
    return {ok, note.str()};
}

}  // namespace

int main() {
    struct Criterion {
        std::string label;
        double budget_s;  // 0 = no stated budget
        std::function<Outcome()> run;
    };

    std::vector<Criterion> criteria;

    criteria.push_back({"theta functorial under composition and tensor, 1000 random pairs",
                        5.0, [] {
        Rng rng(1001);
        std::size_t bad = 0;
        for (int i = 0; i < 1000; ++i) {
            auto [f, g] = random_pair(rng, 7, full_pool(), false);
            if (theta(compose(f, g)) != theta(f) + theta(g)) ++bad;
            if (theta(tensor(f, g)) != theta(f) + theta(g)) ++bad;
        }
        return Outcome{bad == 0, bad ? std::to_string(bad) + " failures" : "exact"};
    }});

    criteria.push_back({"euler characteristic composition law on the same corpus", 0.0, [] {
        Rng rng(1001);
        std::size_t bad = 0;
        for (int i = 0; i < 1000; ++i) {
            auto [f, g] = random_pair(rng, 7, full_pool(), false);
            if (euler_char(compose(f, g)) !=
                euler_char(f) + euler_char(g) - BigInt(f.target.intervals))
                ++bad;
        }
        return Outcome{bad == 0, bad ? std::to_string(bad) + " failures" : "exact"};
    }});

    criteria.push_back({"oracle equivalence: generator pairs and 500 random expressions",
                        30.0, [] { return suites_pass({"oracle"}); }});

    criteria.push_back({"canonical keys identify (g,k,0) with (0,2g+k,1) iff k > 0", 0.0, [] {
        return suites_pass({"prop2.3"});
    }});

    criteria.push_back({"crosscap slide and reflection squares", 0.0, [] {
        bool ok = true;
        Component m1;
        m1.crosscaps = 1;
        m1.cycles.push_back(BoundaryCycle::circle({Side::target, SlotKind::circle, 0}, 1));
        ok = ok && Cobordism({0, 0}, {1, 0}, {m1}) == generator("mobius");
        ok = ok && compose(generator("twist_circle"), generator("twist_circle")) ==
                       identity({1, 0});
        ok = ok && compose(generator("twist_interval"), generator("twist_interval")) ==
                       identity({0, 1});
        return Outcome{ok, "exact"};
    }});

    criteria.push_back({"adjunction naturality squares with the stated crosscap counts",
                        0.0, [] { return suites_pass({"thm2.6"}); }});

    criteria.push_back({"group completions of the monoid fixtures and witness searches",
                        0.0, [] { return suites_pass({"thm3.3", "prop3.4", "prop3.5"}); }});

    criteria.push_back({"closed-sector localisation relations with theta cross-checks",
                        0.0, [] { return suites_pass({"thm3.6"}); }});

    criteria.push_back({"open, windowed and open-closed localisation suites", 0.0, [] {
        return suites_pass({"thm3.8", "thm3.9", "thm3.10", "thm3.11", "thmS"});
    }});

    criteria.push_back({"orientable inclusion doubles the class; pi1 free ranks", 0.0, [] {
        return suites_pass({"thm3.7", "cor5.2"});
    }});

    criteria.push_back({"integer functor additivity and the strict-monoidal test", 0.0, [] {
        return suites_pass({"prop4.1"});
    }});

    criteria.push_back({"invertible theory functoriality, units, naturality, symmetry",
                        0.0, [] { return suites_pass({"thm4.4"}); }});

    criteria.push_back({"one-dimensional algebra axioms and contraction agreement", 60.0,
                        [] { return suites_pass({"cor4.5"}); }});

    criteria.push_back({"full verification run is deterministic and fast", 120.0, [] {
        auto render = [] {
            std::ostringstream os;
            for (const auto& rep : run_all()) os << rep.to_string(true);
            return os.str();
        };
        std::string first = render();
        std::string second = render();
        bool ok = first == second;
        return Outcome{ok, ok ? "identical reports across runs" : "reports differ"};
    }});

    bool all = true;
    double total_s = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total_s += s;
        bool in_budget = criteria[i].budget_s == 0.0 || s < criteria[i].budget_s;
        bool pass = out.pass && in_budget;
        all = all && pass;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
             << criteria[i].label << " (" << out.note;
        if (criteria[i].budget_s != 0.0)
            line << ", " << s << " s of " << criteria[i].budget_s << " s budget";
        line << ")";
        std::cout << line.str() << "\n" << std::flush;
    }
    std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " in " << total_s
              << " s\n";
    return all ? 0 : 1;
}
