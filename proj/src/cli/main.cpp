// Command-line surface: every computation in the library behind one binary.
// Exit codes: 0 ok, 2 bad usage or unparsable literal, 3 domain violation,
// 4 internal-consistency failure.  Box scans may parallelize; the worker
// count is capped by SUPERKL_THREADS and never affects the output bytes.

#include "CLI11.hpp"
#include "json.hpp"

#include "superkl/canonical.hpp"
#include "superkl/exterior.hpp"
#include "superkl/rep.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace skl;
using nlohmann::json;

namespace {

int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SUPERKL_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return static_cast<int>(hw);
}

// Runs body(i) for i in [0, count); results must be written by index so the
// output is independent of the worker count.
void parallel_over(int count, const std::function<void(int)>& body) {
    const int workers = std::min(thread_cap(), std::max(count, 1));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> hold(error_lock);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct BoxRange {
    int lo = 0;
    int hi = 0;
};

BoxRange parse_box(const std::string& s) {
    static const std::regex form(R"(^(-?\d+)\.\.(-?\d+)$)");
    std::smatch m;
    if (!std::regex_match(s, m, form))
        throw std::invalid_argument("bad box range: " + s +
                                    " (expected LO..HI)");
    BoxRange r{std::stoi(m[1]), std::stoi(m[2])};
    if (r.hi < r.lo) throw std::invalid_argument("empty box range: " + s);
    return r;
}

void check_box_size(Shape sh, BoxRange r) {
    double cells = 1;
    for (int i = 0; i < sh.size(); ++i) cells *= r.hi - r.lo + 1;
    if (cells > 4e6)
        throw std::domain_error("box too large: " + std::to_string(r.lo) +
                                ".." + std::to_string(r.hi));
}

std::vector<Weight> weight_box(Shape sh, BoxRange r, bool dominant_only) {
    check_box_size(sh, r);
    std::vector<Weight> out;
    std::vector<int> neg(sh.m), pos(sh.n);
    std::function<void(int)> fill = [&](int k) {
        if (k == sh.size()) {
            Weight w(sh, neg, pos);
            if (!dominant_only || dominant(w)) out.push_back(w);
            return;
        }
        for (int v = r.lo; v <= r.hi; ++v) {
            (k < sh.m ? neg[k] : pos[k - sh.m]) = v;
            fill(k + 1);
        }
    };
    fill(0);
    return out;
}

std::vector<GlWeight> gl_box(Shape sh, BoxRange r) {
    check_box_size(sh, r);
    std::vector<GlWeight> out;
    std::vector<int> neg(sh.m), pos(sh.n);
    std::function<void(int)> fill = [&](int k) {
        if (k == sh.size()) {
            GlWeight w(sh, neg, pos);
            if (w.dominant()) out.push_back(w);
            return;
        }
        for (int v = r.lo; v <= r.hi; ++v) {
            (k < sh.m ? neg[k] : pos[k - sh.m]) = v;
            fill(k + 1);
        }
    };
    fill(0);
    return out;
}

Weight parse_weight(Shape sh, const std::string& lit) {
    const Weight f = Weight::parse(lit);
    if (f.shape() != sh)
        throw std::domain_error("weight " + lit + " does not have shape " +
                                sh.str());
    return f;
}

GlWeight parse_gl(Shape sh, const std::string& lit) {
    const GlWeight l = GlWeight::parse(lit);
    if (l.shape() != sh)
        throw std::domain_error("weight " + lit + " does not have shape " +
                                sh.str());
    return l;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::domain_error("cannot open output file " + path);
    os << text;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// Shared flags: every subcommand carries a shape, most carry an output path
// and a format switch.
struct Common {
    int m = 1;
    int n = 1;
    std::string out;
    bool as_json = false;
    bool as_csv = false;
    Shape shape() const { return Shape{m, n}; }
};

Common* add_common(CLI::App* cmd, bool with_json = true, bool with_csv = false) {
    auto c = std::make_shared<Common>();
    cmd->add_option("-m", c->m, "negative block size")->required();
    cmd->add_option("-n", c->n, "positive block size")->required();
    cmd->add_option("-o,--output", c->out, "write output to a file");
    if (with_json) cmd->add_flag("--json", c->as_json, "emit JSON");
    if (with_csv) cmd->add_flag("--csv", c->as_csv, "emit CSV");
    static std::vector<std::shared_ptr<Common>> keep;
    keep.push_back(c);
    return c.get();
}

std::string terms_text(const std::string& head,
                       const std::map<Weight, Laurent>& terms) {
    std::ostringstream os;
    os << head << "\n";
    for (const auto& [g, c] : terms) os << g.str() << " : " << c.str() << "\n";
    return os.str();
}

json terms_json(const std::map<Weight, Laurent>& terms) {
    json obj = json::object();
    for (const auto& [g, c] : terms) obj[g.str()] = c.str();
    return obj;
}

int run_suite(const std::string& name, Shape sh, BoxRange r, int d,
              std::ostringstream& report);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact canonical-basis combinatorics for gl(m|n)"};
    app.require_subcommand(1);
    std::function<void()> action;

    // tpoly: canonical (or dual canonical) basis vector in the tensor module.
    {
        auto cmd = app.add_subcommand("tpoly", "expand T_f (or L_f) at bound d");
        auto c = add_common(cmd);
        auto lit = std::make_shared<std::string>();
        auto d = std::make_shared<int>(INT_MIN);
        auto dual = std::make_shared<bool>(false);
        cmd->add_option("-f", *lit, "weight literal (..|..)")->required();
        cmd->add_option("-d", *d, "truncation bound (default max entry + 4)");
        cmd->add_flag("--dual", *dual, "dual canonical basis");
        cmd->callback([=, &action] {
            action = [=] {
                const Weight f = parse_weight(c->shape(), *lit);
                const int bound = *d == INT_MIN ? f.max_value() + 4 : *d;
                if (f.max_value() > bound)
                    throw std::domain_error("entries of " + f.str() +
                                            " exceed bound " +
                                            std::to_string(bound));
                const TensorVec v =
                    *dual ? l_basis(f, bound) : t_basis(f, bound);
                const std::string base = *dual ? "L" : "T";
                if (c->as_json) {
                    json out{{"kind", "tpoly"},
                             {"basis", base},
                             {"f", f.str()},
                             {"d", bound},
                             {"terms", terms_json(v.terms)}};
                    emit(out.dump(2) + "\n", c->out);
                } else {
                    emit(terms_text(base + "_" + f.str() +
                                        "  [d = " + std::to_string(bound) + "]",
                                    v.terms),
                         c->out);
                }
            };
        });
    }

    // upoly: canonical basis vector in the exterior module.
    {
        auto cmd = app.add_subcommand("upoly", "expand U_f in the K basis");
        auto c = add_common(cmd);
        auto lit = std::make_shared<std::string>();
        cmd->add_option("-f", *lit, "dominant weight literal")->required();
        cmd->callback([=, &action] {
            action = [=] {
                const Weight f = parse_weight(c->shape(), *lit);
                const ExtVec v = u_basis(f);
                if (c->as_json) {
                    json out{{"kind", "upoly"},
                             {"f", f.str()},
                             {"terms", terms_json(v.terms)}};
                    emit(out.dump(2) + "\n", c->out);
                } else {
                    emit(terms_text("U_" + f.str(), v.terms), c->out);
                }
            };
        });
    }

    // lpoly: one dual-canonical coefficient, two routes cross-checked.
    {
        auto cmd = app.add_subcommand(
            "lpoly", "dual canonical coefficient l_{g,f} by two routes");
        auto c = add_common(cmd);
        auto glit = std::make_shared<std::string>();
        auto flit = std::make_shared<std::string>();
        cmd->add_option("-g", *glit, "lower dominant weight")->required();
        cmd->add_option("-f", *flit, "upper dominant weight")->required();
        cmd->callback([=, &action] {
            action = [=] {
                const Weight g = parse_weight(c->shape(), *glit);
                const Weight f = parse_weight(c->shape(), *flit);
                const Laurent closed = closed_l_poly(g, f);
                const Laurent recursive = l_poly_recursive(g, f);
                if (closed != recursive)
                    throw std::logic_error("l routes disagree: closed " +
                                           closed.str() + " vs recursive " +
                                           recursive.str());
                if (c->as_json) {
                    json out{{"kind", "lpoly"},
                             {"g", g.str()},
                             {"f", f.str()},
                             {"lpoly", closed.str()}};
                    emit(out.dump(2) + "\n", c->out);
                } else {
                    emit("l[" + g.str() + ", " + f.str() + "] = " +
                             closed.str() + "\n",
                         c->out);
                }
            };
        });
    }

    // decomp: Kac-module decomposition rows.
    {
        auto cmd = app.add_subcommand(
            "decomp", "Kac modules containing each simple in a box");
        auto c = add_common(cmd, true, true);
        auto lit = std::make_shared<std::string>();
        auto boxs = std::make_shared<std::string>();
        cmd->add_option("--lambda", *lit, "single dominant weight X:(..|..)");
        cmd->add_option("--box", *boxs, "range LO..HI of dominant weights");
        cmd->callback([=, &action] {
            action = [=] {
                std::vector<GlWeight> cols;
                if (!lit->empty()) cols.push_back(parse_gl(c->shape(), *lit));
                if (!boxs->empty())
                    for (const GlWeight& l : gl_box(c->shape(), parse_box(*boxs)))
                        cols.push_back(l);
                if (cols.empty())
                    throw std::invalid_argument(
                        "decomp needs --lambda or --box");
                std::vector<DecompRow> rows(cols.size());
                parallel_over(static_cast<int>(cols.size()), [&](int i) {
                    rows[i] = kac_decomposition_row(cols[i]);
                });
                if (c->as_csv) {
                    std::set<GlWeight> mus;
                    for (const DecompRow& row : rows)
                        for (const auto& [mu, v] : row.entries) mus.insert(mu);
                    std::ostringstream os;
                    os << csv_quote("mu\\lambda");
                    for (const GlWeight& l : cols) os << "," << csv_quote(l.str());
                    os << "\n";
                    for (const GlWeight& mu : mus) {
                        os << csv_quote(mu.str());
                        for (const DecompRow& row : rows)
                            os << "," << (row.entries.count(mu) ? 1 : 0);
                        os << "\n";
                    }
                    emit(os.str(), c->out);
                } else if (c->as_json) {
                    json obj = json::object();
                    for (const DecompRow& row : rows) {
                        json entry = json::object();
                        for (const auto& [mu, v] : row.entries)
                            entry[mu.str()] = v;
                        obj[row.lambda.str()] = entry;
                    }
                    emit(json{{"kind", "decomp"}, {"rows", obj}}.dump(2) + "\n",
                         c->out);
                } else {
                    std::ostringstream os;
                    for (const DecompRow& row : rows) {
                        os << row.lambda.str() << " :";
                        for (const auto& [mu, v] : row.entries)
                            os << " " << mu.str();
                        os << "\n";
                    }
                    emit(os.str(), c->out);
                }
            };
        });
    }

    // tilting: (U(lambda):K(mu)) multiplicities.
    {
        auto cmd = app.add_subcommand(
            "tilting", "Kac multiplicities in a tilting module");
        auto c = add_common(cmd, true, true);
        auto lit = std::make_shared<std::string>();
        cmd->add_option("--lambda", *lit, "dominant weight X:(..|..)")
            ->required();
        cmd->callback([=, &action] {
            action = [=] {
                const GlWeight lam = parse_gl(c->shape(), *lit);
                const Weight f = rho_shift(lam);
                if (!dominant(f))
                    throw std::domain_error("weight " + lam.str() +
                                            " is not dominant");
                std::map<GlWeight, int> row;
                for (const auto& [g, coef] : u_basis(f).terms) {
                    const GlWeight mu = rho_unshift(g);
                    const int v = tilting_multiplicity(lam, mu);
                    if (v != 1)
                        throw std::logic_error("tilting row misses " + mu.str());
                    row[mu] = v;
                }
                if (c->as_csv) {
                    std::ostringstream os;
                    os << csv_quote("mu") << "," << csv_quote(lam.str()) << "\n";
                    for (const auto& [mu, v] : row)
                        os << csv_quote(mu.str()) << "," << v << "\n";
                    emit(os.str(), c->out);
                } else if (c->as_json) {
                    json entry = json::object();
                    for (const auto& [mu, v] : row) entry[mu.str()] = v;
                    emit(json{{"kind", "tilting"},
                              {"lambda", lam.str()},
                              {"entries", entry}}
                                 .dump(2) +
                             "\n",
                         c->out);
                } else {
                    std::ostringstream os;
                    os << lam.str() << " :";
                    for (const auto& [mu, v] : row) os << " " << mu.str();
                    os << "\n";
                    emit(os.str(), c->out);
                }
            };
        });
    }

    // char: irreducible character in the Kac basis.
    {
        auto cmd = app.add_subcommand(
            "char", "irreducible character in the Kac basis");
        auto c = add_common(cmd);
        auto lit = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(6);
        cmd->add_option("--lambda", *lit, "dominant weight X:(..|..)")
            ->required();
        cmd->add_option("--depth", *depth,
                        "keep terms of relative length <= depth");
        cmd->callback([=, &action] {
            action = [=] {
                const GlWeight lam = parse_gl(c->shape(), *lit);
                const auto chr = character_in_kac_basis(lam, *depth);
                if (c->as_json) {
                    json entry = json::object();
                    for (const auto& [mu, v] : chr) entry[mu.str()] = v;
                    emit(json{{"kind", "char"},
                              {"lambda", lam.str()},
                              {"depth", *depth},
                              {"coefficients", entry}}
                                 .dump(2) +
                             "\n",
                         c->out);
                } else {
                    std::ostringstream os;
                    os << "ch L(" << lam.str() << ")  [depth " << *depth
                       << "]\n";
                    for (const auto& [mu, v] : chr)
                        os << mu.str() << " : " << v << "\n";
                    emit(os.str(), c->out);
                }
            };
        });
    }

    // ext: Poincare series of Ext groups.
    {
        auto cmd = app.add_subcommand("ext", "Ext Poincare series");
        auto c = add_common(cmd);
        auto mus = std::make_shared<std::string>();
        auto lams = std::make_shared<std::string>();
        auto degree = std::make_shared<int>(12);
        auto kac = std::make_shared<bool>(false);
        cmd->add_option("--mu", *mus, "dominant weight X:(..|..)")->required();
        cmd->add_option("--lambda", *lams, "dominant weight X:(..|..)")
            ->required();
        cmd->add_option("--degree", *degree,
                        "truncation degree for the simple-simple series");
        cmd->add_flag("--kac", *kac, "Ext from the Kac module K(mu) instead");
        cmd->callback([=, &action] {
            action = [=] {
                const GlWeight mu = parse_gl(c->shape(), *mus);
                const GlWeight lam = parse_gl(c->shape(), *lams);
                const ExtSeries e = *kac
                                        ? ext_kac_simple(mu, lam)
                                        : ext_simple_simple(mu, lam, *degree);
                if (c->as_json) {
                    json out{{"kind", *kac ? "ext-kac-simple"
                                           : "ext-simple-simple"},
                             {"mu", mu.str()},
                             {"lambda", lam.str()},
                             {"series", e.series.str()}};
                    if (!*kac) out["degree"] = *degree;
                    emit(out.dump(2) + "\n", c->out);
                } else {
                    emit(e.series.str() + "\n", c->out);
                }
            };
        });
    }

    // dual: highest weight of the dual simple module.
    {
        auto cmd = app.add_subcommand("dual", "dual simple highest weight");
        auto c = add_common(cmd);
        auto lit = std::make_shared<std::string>();
        cmd->add_option("--lambda", *lit, "dominant weight X:(..|..)")
            ->required();
        cmd->callback([=, &action] {
            action = [=] {
                const GlWeight lam = parse_gl(c->shape(), *lit);
                const GlWeight d = dual_simple_highest_weight(lam);
                if (c->as_json)
                    emit(json{{"kind", "dual"},
                              {"lambda", lam.str()},
                              {"dual", d.str()}}
                                 .dump(2) +
                             "\n",
                         c->out);
                else
                    emit(d.str() + "\n", c->out);
            };
        });
    }

    // block: central character data.
    {
        auto cmd = app.add_subcommand("block", "block of a weight");
        auto c = add_common(cmd);
        auto lit = std::make_shared<std::string>();
        cmd->add_option("--lambda", *lit, "integral weight X:(..|..)")
            ->required();
        cmd->callback([=, &action] {
            action = [=] {
                const GlWeight lam = parse_gl(c->shape(), *lit);
                const std::string b = infweight_str(block_of(lam));
                if (c->as_json)
                    emit(json{{"kind", "block"},
                              {"lambda", lam.str()},
                              {"block", b}}
                                 .dump(2) +
                             "\n",
                         c->out);
                else
                    emit(b + "\n", c->out);
            };
        });
    }

    // crystal: DOT export of crystal graphs over a box.
    {
        auto cmd = app.add_subcommand("crystal", "DOT graph of crystal edges");
        auto c = add_common(cmd, false);
        auto boxs = std::make_shared<std::string>();
        auto kinds = std::make_shared<std::string>("tensor");
        auto dual = std::make_shared<bool>(false);
        auto dot = std::make_shared<bool>(false);
        auto amin = std::make_shared<int>(INT_MIN);
        auto amax = std::make_shared<int>(INT_MIN);
        cmd->add_option("--box", *boxs, "range LO..HI of entries")->required();
        cmd->add_option("--kind", *kinds, "tensor or dominant")
            ->check(CLI::IsMember({"tensor", "dominant"}));
        cmd->add_flag("--dual", *dual, "dual crystal operators");
        cmd->add_flag("--dot", *dot, "emit DOT (the only format)");
        cmd->add_option("--amin", *amin, "smallest color (default LO-1)");
        cmd->add_option("--amax", *amax, "largest color (default HI)");
        cmd->callback([=, &action] {
            action = [=] {
                const BoxRange r = parse_box(*boxs);
                const bool dom = *kinds == "dominant";
                const CrystalKind kind =
                    dom ? (*dual ? CrystalKind::DominantDual
                                 : CrystalKind::Dominant)
                        : (*dual ? CrystalKind::TensorDual
                                 : CrystalKind::Tensor);
                const auto box = weight_box(c->shape(), r, dom);
                const int lo = *amin == INT_MIN ? r.lo - 1 : *amin;
                const int hi = *amax == INT_MIN ? r.hi : *amax;
                emit(crystal_dot(box, lo, hi, kind), c->out);
            };
        });
    }

    // check: named invariant suites over a box.
    {
        auto cmd = app.add_subcommand("check", "run an invariant suite");
        auto c = add_common(cmd, false);
        auto suite = std::make_shared<std::string>();
        auto boxs = std::make_shared<std::string>("0..3");
        auto d = std::make_shared<int>(INT_MIN);
        cmd->add_option("--suite", *suite,
                        "strings | positivity | routes | kac")
            ->required();
        cmd->add_option("--box", *boxs, "range LO..HI of entries");
        cmd->add_option("-d", *d, "truncation bound (default HI + 4)");
        cmd->callback([=, &action] {
            action = [=] {
                const BoxRange r = parse_box(*boxs);
                const int bound = *d == INT_MIN ? r.hi + 4 : *d;
                std::ostringstream report;
                const int violations =
                    run_suite(*suite, c->shape(), r, bound, report);
                report << "suite " << *suite << ": "
                       << (violations == 0 ? "pass" : "FAIL") << "\n";
                emit(report.str(), c->out);
                if (violations != 0)
                    throw std::logic_error("suite " + *suite + " found " +
                                           std::to_string(violations) +
                                           " violations");
            };
        });
    }

    // scan-positivity: coefficient positivity over a box.
    {
        auto cmd = app.add_subcommand(
            "scan-positivity", "positivity of t- and l-coefficients");
        auto c = add_common(cmd, false);
        auto boxs = std::make_shared<std::string>("0..3");
        auto d = std::make_shared<int>(INT_MIN);
        cmd->add_option("--box", *boxs, "range LO..HI of entries");
        cmd->add_option("-d", *d, "truncation bound (default HI + 4)");
        cmd->callback([=, &action] {
            action = [=] {
                const BoxRange r = parse_box(*boxs);
                const int bound = *d == INT_MIN ? r.hi + 4 : *d;
                const auto seeds = weight_box(c->shape(), r, false);
                const auto box = box_closure(seeds, bound);
                const auto bad = positivity_scan(box, bound);
                std::ostringstream os;
                os << "box " << box.size() << " weights, bound " << bound
                   << "\n";
                for (const auto& v : bad)
                    os << "violation " << v.family << "[" << v.g.str() << ", "
                       << v.f.str() << "] = " << v.poly.str() << "\n";
                os << (bad.empty() ? "positivity: pass" : "positivity: FAIL")
                   << "\n";
                emit(os.str(), c->out);
                if (!bad.empty())
                    throw std::logic_error("positivity scan found " +
                                           std::to_string(bad.size()) +
                                           " violations");
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

namespace {

int run_suite(const std::string& name, Shape sh, BoxRange r, int d,
              std::ostringstream& report) {
    if (name == "strings") {
        const auto box = weight_box(sh, r, true);
        std::vector<int> bad(box.size(), 0);
        parallel_over(static_cast<int>(box.size()), [&](int i) {
            for (int a = r.lo - 1; a <= r.hi; ++a) {
                const CrystalOps ops = crystal_dominant(box[i], a);
                const CrystalOps dops = crystal_dominant_dual(box[i], a);
                if (ops.eps + ops.phi > 2 || dops.eps + dops.phi > 2)
                    bad[i] = 1;
            }
        });
        int violations = 0;
        for (size_t i = 0; i < box.size(); ++i)
            if (bad[i]) {
                ++violations;
                report << "string longer than two at " << box[i].str() << "\n";
            }
        report << "strings: " << box.size() << " dominant weights, colors "
               << r.lo - 1 << ".." << r.hi << "\n";
        return violations;
    }
    if (name == "positivity") {
        const auto box = box_closure(weight_box(sh, r, false), d);
        const auto bad = positivity_scan(box, d);
        for (const auto& v : bad)
            report << "violation " << v.family << "[" << v.g.str() << ", "
                   << v.f.str() << "] = " << v.poly.str() << "\n";
        report << "positivity: " << box.size() << " weights at bound " << d
               << "\n";
        return static_cast<int>(bad.size());
    }
    if (name == "routes") {
        const auto box = box_closure(weight_box(sh, r, false), d);
        const auto [tt, lt] = solve_bar_invariant_basis(box, d);
        std::vector<std::string> notes(box.size());
        parallel_over(static_cast<int>(box.size()), [&](int i) {
            const Weight& f = box[i];
            const TensorVec direct = t_basis(f, d);
            for (const Weight& g : box)
                if (coeff(direct, g) != tt.poly(g, f)) {
                    notes[i] = "t routes disagree at " + f.str();
                    return;
                }
            if (!dominant(f)) return;
            for (const Weight& g : box) {
                if (!dominant(g)) continue;
                const Laurent want = lt.poly(g, f);
                if (closed_l_poly(g, f) != want ||
                    l_poly_recursive(g, f) != want) {
                    notes[i] = "l routes disagree at " + f.str();
                    return;
                }
            }
        });
        int violations = 0;
        for (const std::string& s : notes)
            if (!s.empty()) {
                ++violations;
                report << s << "\n";
            }
        report << "routes: " << box.size() << " weights at bound " << d
               << "\n";
        return violations;
    }
    if (name == "kac") {
        const auto box = gl_box(sh, r);
        std::vector<std::string> notes(box.size());
        parallel_over(static_cast<int>(box.size()), [&](int i) {
            const GlWeight& lam = box[i];
            try {
                const DecompRow row = kac_decomposition_row(lam);
                const int ratyp = atypicality(rho_shift(lam));
                if (row.entries.size() != (1u << ratyp))
                    notes[i] = "row size off at " + lam.str();
                for (const GlWeight& mu : box)
                    (void)kac_multiplicity(mu, lam);
            } catch (const std::logic_error& e) {
                notes[i] = e.what();
            }
        });
        int violations = 0;
        for (const std::string& s : notes)
            if (!s.empty()) {
                ++violations;
                report << s << "\n";
            }
        report << "kac: " << box.size() << " dominant weights\n";
        return violations;
    }
    throw std::domain_error("unknown suite: " + name);
}

}  // namespace
