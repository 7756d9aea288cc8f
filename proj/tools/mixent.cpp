// Copyright 2026 The mixent Authors
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

// mixent command-line front end. Every subcommand writes to stdout or --out.
// Exit status: 0 success, 1 usage error, 2 verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mixent/capacity.hpp"
#include "mixent/codesearch.hpp"
#include "mixent/csv.hpp"
#include "mixent/error.hpp"
#include "mixent/hashing.hpp"
#include "mixent/protocols.hpp"
#include "mixent/qecc.hpp"
#include "mixent/twirl.hpp"

namespace {

using namespace mixent;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerification = 2;

struct CurvesArgs {
    double fmin = 0.5;
    double fmax = 1.0;
    std::size_t points = 101;
    bool log = false;
};

int run_curves(const CurvesArgs &a, std::ostream &out) {
    const auto grid = a.log ? log_grid(a.fmin, a.fmax, a.points) : linear_grid(a.fmin, a.fmax, a.points);
    write_curves_csv(out, emit_curves(grid), a.log);
    return kOk;
}

struct RecurrenceArgs {
    double f0 = 0.75;
    std::string variant = "twirl";
    double target = 1.0 - 1e-6;
    std::size_t max_steps = kMaxRecurrenceSteps;
};

int run_recurrence(const RecurrenceArgs &a, std::ostream &out) {
    const RecurrenceVariant v =
        a.variant == "macchiavello" ? RecurrenceVariant::Macchiavello : RecurrenceVariant::WernerTwirl;
    const RecurrenceTrace trace = recurrence_iterate(a.f0, v, StopRule{a.target, a.max_steps});
    out << "step,F,p_pass,fraction_remaining\n";
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const RecurrenceRecord &r = trace.steps[k];
        out << k + 1 << ',' << csv_number(r.p.fidelity()) << ',' << csv_number(r.p_pass) << ','
            << csv_number(r.fraction_remaining) << '\n';
    }
    return kOk;
}

struct HashArgs {
    std::size_t n = 8;
    double f = 0.95;
    std::size_t rounds = 3;
    std::size_t seeds = 1;
    std::uint64_t seed = 0;
    bool likely_set = false;
};

int run_hash_sim(const HashArgs &a, std::ostream &out) {
    out << "seed,round,posterior_entropy,candidates_remaining,identified\n";
    for (std::size_t i = 0; i < a.seeds; ++i) {
        const std::uint64_t seed = a.seed + i;
        std::mt19937_64 rng(seed);
        HashingOptions options;
        options.likely_set = a.likely_set;
        const HashingReport r = hashing_simulate(werner(a.f), a.n, a.rounds, rng, options);
        for (std::size_t k = 0; k < r.entropy_trace.size(); ++k) {
            out << seed << ',' << k << ',' << csv_number(r.entropy_trace[k]) << ',' << r.candidate_trace[k] << ','
                << (r.candidate_trace[k] == 1 ? 1 : 0) << '\n';
        }
    }
    return kOk;
}

struct SearchArgs {
    std::size_t n = 5;
    std::size_t m = 1;
    std::size_t t = 1;
    std::size_t budget = 10'000'000;
    std::string minimize = "ops";
    std::uint64_t seed = 1;
    std::size_t sweep = 1;
    std::size_t cap = SearchOptions{}.initial_cap;
};

int run_search(const SearchArgs &a, std::ostream &out) {
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = 0; i < a.sweep; ++i) seeds.push_back(a.seed + i);
    const Minimize minimize = a.minimize == "bxors" ? Minimize::Bxors : Minimize::Ops;
    const SweepResult sweep = search_sweep(a.n, a.m, a.t, a.budget, minimize, seeds, SearchOptions{a.cap});
    std::size_t attempts = 0;
    for (const SearchResult &r : sweep.runs) attempts += r.attempts;
    if (!sweep.best) {
        out << "no solution: n=" << a.n << " m=" << a.m << " t=" << a.t << " syndromes=" << syndrome_count(a.n, a.t)
            << " readouts=" << (std::size_t{1} << (a.n - a.m)) << " attempts=" << attempts << '\n';
        return kOk;
    }
    const CodeSolution &s = *sweep.best;
    out << format_gate_list(s.gates);
    out << "ops=" << s.op_count << " bxors=" << s.bxor_count << " goodcon=" << s.satisfies_goodcon
        << " badcon=" << s.satisfies_badcon << '\n';
    return kOk;
}

struct PublishedArgs {
    bool as_printed = false;
};

int run_verify_published(const PublishedArgs &a, std::ostream &out) {
    const GF2Affine m = a.as_printed ? published_affine_as_printed() : published_affine();
    const TableCheck c = verify_against_table(m);
    out << "affine map (column 0 leftmost), offset " << format_word(m.offset(), m.pairs(), false) << '\n';
    for (const std::string &row : m.row_strings()) out << "  " << row << '\n';
    out << "det=" << c.det << " symplectic=" << c.symplectic << " goodcon=" << c.conditions.goodcon
        << " badcon=" << c.conditions.badcon << '\n';
    for (const std::string &f : c.failures) out << "FAIL " << f << '\n';
    out << (c.ok ? "published table: ok" : "published table: mismatch") << '\n';
    return c.ok ? kOk : kVerification;
}

struct CodeArgs {
    std::size_t random_unitaries = 0;
    std::uint64_t seed = 0;
    std::size_t states = 10;
};

int run_verify_code(const CodeArgs &a, std::ostream &out) {
    const Codeword code = published_codewords();
    const auto errors = standard_error_set(5);
    const KLResult kl = kl_check(code, errors);
    const KLDecoder decoder(code, errors);
    std::mt19937_64 rng(a.seed);

    std::vector<ErrorOperator> trials = errors;
    for (std::size_t k = 0; k < a.random_unitaries; ++k) {
        trials.push_back(ErrorOperator::unitary(random_unitary(2, rng), k % 5));
    }
    std::vector<std::pair<Complex, Complex>> states;
    for (std::size_t k = 0; k < std::max<std::size_t>(a.states, 1); ++k) states.push_back(random_logical_state(rng));

    bool ok = kl.ok;
    out << "operator,min_fidelity,result\n";
    for (const ErrorOperator &e : trials) {
        double worst = 1.0;
        for (const auto &[alpha, beta] : states) worst = std::min(worst, decoder.run(alpha, beta, e).fidelity);
        const bool pass = worst >= 1.0 - 1e-9;
        ok = ok && pass;
        out << e.label() << ',' << csv_number(worst) << ',' << (pass ? "pass" : "fail") << '\n';
    }
    out << "kl_conditions," << csv_number(kl.max_residual) << ',' << (kl.ok ? "pass" : "fail") << '\n';
    return ok ? kOk : kVerification;
}

struct TwirlArgs {
    std::size_t samples = 100;
    std::uint64_t seed = 0;
};

DensityMatrix random_density(std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix4c a;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a(i, j) = Complex(g(rng), g(rng));
    }
    const Matrix4c m = a * a.adjoint();
    return DensityMatrix(m / m.trace().real());
}

int run_twirl_check(const TwirlArgs &a, std::ostream &out) {
    std::mt19937_64 rng(a.seed);
    const TwirlGroup group = twirl_group(TwirlKind::T12);
    double off = 0.0, spread = 0.0, singlet = 0.0, entropy_drop = 0.0;
    for (std::size_t k = 0; k < a.samples; ++k) {
        const DensityMatrix m = random_density(rng);
        const DensityMatrix w = apply_twirl(m, group);
        const Matrix4c b = bell_basis_matrix(w);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (i != j) off = std::max(off, std::abs(b(i, j)));
            }
        }
        const double t0 = b(0, 0).real(), t1 = b(1, 1).real(), t2 = b(2, 2).real();
        spread = std::max(spread, std::max({t0, t1, t2}) - std::min({t0, t1, t2}));
        singlet = std::max(singlet, std::abs(b(3, 3).real() - bell_basis_matrix(m)(3, 3).real()));
        entropy_drop = std::max(entropy_drop, von_neumann_entropy(m) - von_neumann_entropy(w));
    }
    const bool ok = off < 1e-10 && spread < 1e-10 && singlet < 1e-12 && entropy_drop <= 1e-12;
    out << "check,value,limit,result\n";
    out << "bell_offdiagonal," << csv_number(off) << ",1e-10," << (off < 1e-10 ? "pass" : "fail") << '\n';
    out << "triplet_spread," << csv_number(spread) << ",1e-10," << (spread < 1e-10 ? "pass" : "fail") << '\n';
    out << "singlet_shift," << csv_number(singlet) << ",1e-12," << (singlet < 1e-12 ? "pass" : "fail") << '\n';
    out << "entropy_decrease," << csv_number(entropy_drop) << ",1e-12," << (entropy_drop <= 1e-12 ? "pass" : "fail")
        << '\n';
    return ok ? kOk : kVerification;
}

struct DirectArgs {
    double p = 0.5;
    std::size_t pairs = 2'000'000;
    std::uint64_t seed = 0;
};

int run_direct_purify(const DirectArgs &a, std::ostream &out) {
    std::mt19937_64 rng(a.seed);
    const DirectPurifyResult r = direct_purify_sim(a.p, a.pairs, rng);
    out << "p,trials,successes,success_prob,success_stderr,yield,yield_stderr,min_survivor_fidelity\n";
    out << csv_number(a.p) << ',' << r.trials << ',' << r.successes << ',' << csv_number(r.estimated_success_prob)
        << ',' << csv_number(r.success_prob_stderr) << ',' << csv_number(r.estimated_yield) << ','
        << csv_number(r.yield_stderr) << ',' << csv_number(r.min_survivor_fidelity) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement purification and Bell-pair code tools"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("-o,--out", out_path, "Write output to this file instead of stdout");
    int status = kOk;
    std::ostringstream buffer;
    buffer.imbue(std::locale::classic());

    CurvesArgs curves;
    auto *c = app.add_subcommand("curves", "Werner-state yield and bound curves as CSV");
    c->add_option("--fmin", curves.fmin, "Smallest fidelity")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    c->add_option("--fmax", curves.fmax, "Largest fidelity")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    c->add_option("--points", curves.points, "Grid size")->capture_default_str()->check(CLI::PositiveNumber);
    c->add_flag("--log", curves.log, "Space points evenly in log10(F - 1/2) and add that column");
    c->callback([&] { status = run_curves(curves, buffer); });

    RecurrenceArgs rec;
    auto *r = app.add_subcommand("recurrence", "Iterate the two-copy recurrence protocol, one CSV row per step");
    r->add_option("--F0", rec.f0, "Initial Werner fidelity, in (1/2, 1]")->required();
    r->add_option("--variant", rec.variant, "Reshuffle between steps")
        ->capture_default_str()
        ->check(CLI::IsMember({"twirl", "macchiavello"}));
    r->add_option("--target", rec.target, "Stop once F reaches this value")->capture_default_str();
    r->add_option("--max-steps", rec.max_steps, "Step limit")->capture_default_str();
    r->callback([&] { status = run_recurrence(rec, buffer); });

    HashArgs hash;
    auto *h = app.add_subcommand("hash-sim", "Exact-posterior hashing on n <= 8 Werner pairs");
    h->add_option("--n", hash.n, "Block size")->capture_default_str()->check(CLI::Range(1, 8));
    h->add_option("--F", hash.f, "Werner fidelity")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    h->add_option("--rounds", hash.rounds, "Parity rounds, at most n")->capture_default_str();
    h->add_option("--seeds", hash.seeds, "Number of runs")->capture_default_str();
    h->add_option("--seed", hash.seed, "First seed; run i uses seed + i")->capture_default_str();
    h->add_flag("--likely-set", hash.likely_set, "Restrict the prior to the likely set");
    h->callback([&] { status = run_hash_sim(hash, buffer); });

    SearchArgs search;
    auto *s = app.add_subcommand("search", "Random-walk search for a BXOR/BY/SX/SXBX block code");
    s->add_option("--n", search.n, "Pairs per block")->capture_default_str();
    s->add_option("--m", search.m, "Kept pairs")->capture_default_str();
    s->add_option("--t", search.t, "Correctable errors")->capture_default_str();
    s->add_option("--budget", search.budget, "Gate appends per seed")->capture_default_str();
    s->add_option("--minimize", search.minimize, "Primary cost")
        ->capture_default_str()
        ->check(CLI::IsMember({"ops", "bxors"}));
    s->add_option("--seed", search.seed, "First seed")->capture_default_str();
    s->add_option("--sweep", search.sweep, "Independent seeds, seed .. seed + sweep - 1")->capture_default_str();
    s->add_option("--cap", search.cap, "Longest gate list tried before a solution is known")->capture_default_str();
    s->callback([&] { status = run_search(search, buffer); });

    PublishedArgs pub;
    auto *p = app.add_subcommand("verify-published", "Check the published five-pair affine map against its syndrome table");
    p->add_flag("--as-printed", pub.as_printed, "Use the matrix exactly as printed, without the one-entry repair");
    p->callback([&] { status = run_verify_published(pub, buffer); });

    CodeArgs code;
    auto *v = app.add_subcommand("verify-code", "Error-correction conditions and decoding for the five-qubit codewords");
    v->add_option("--random-unitaries", code.random_unitaries, "Extra random single-qubit unitary errors")
        ->capture_default_str();
    v->add_option("--states", code.states, "Random logical states per operator")->capture_default_str();
    v->add_option("--seed", code.seed, "Seed")->capture_default_str();
    v->callback([&] { status = run_verify_code(code, buffer); });

    TwirlArgs twirl;
    auto *t = app.add_subcommand("twirl-check", "Twelve-element bilateral twirl on random density matrices");
    t->add_option("--samples", twirl.samples, "Random matrices")->capture_default_str();
    t->add_option("--seed", twirl.seed, "Seed")->capture_default_str();
    t->callback([&] { status = run_twirl_check(twirl, buffer); });

    DirectArgs direct;
    auto *d = app.add_subcommand("direct-purify", "Monte Carlo of the one-step |00>/Psi+ purification");
    d->add_option("--p", direct.p, "Psi+ probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    d->add_option("--pairs", direct.pairs, "Input pairs, even")->capture_default_str();
    d->add_option("--seed", direct.seed, "Seed")->capture_default_str();
    d->callback([&] { status = run_direct_purify(direct, buffer); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const VerificationError &e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerification;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (out_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return kUsage;
        }
        file << buffer.str();
    }
    return status;
}
