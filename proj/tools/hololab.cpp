#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "hololab/json_io.hpp"

namespace {

constexpr const char* kEngineVersion = "hololab-0.1.0";

using hololab::Int;
using hololab::Weight;

// grammar failures exit 2, domain rejections during computation exit 1
struct usage_error {
    std::string msg;
};

hololab::RootSystem parse_system_arg(const std::string& text) {
    try {
        return hololab::parse_root_system(text);
    } catch (const hololab::domain_error& e) {
        throw usage_error{e.what()};
    }
}

Weight parse_weight_arg(const std::string& text, int rank) {
    try {
        return hololab::parse_weight(text, rank);
    } catch (const hololab::domain_error& e) {
        throw usage_error{e.what()};
    }
}

hololab::ParabolicMarking parse_marking_arg(const std::string& text, const hololab::RootSystem& rs) {
    try {
        return hololab::parse_marking(text, rs);
    } catch (const hololab::domain_error& e) {
        throw usage_error{e.what()};
    }
}

std::string entry_str(const hololab::CohomologyEntry& e) {
    if (e.exact()) return e.lower.str();
    return "[" + e.lower.str() + "," + e.upper.str() + "]";
}

std::string report_line(const hololab::CohomologyReport& r) {
    std::ostringstream os;
    os << "tier=" << r.tier << " euler=" << r.euler;
    for (const auto& [q, e] : r.h) os << " h" << q << "=" << entry_str(e);
    return os.str();
}

std::string pieces_text(const hololab::FilteredBundle& f) {
    std::ostringstream os;
    auto ctx = f.marking.levi();
    for (const auto& [w, m] : f.pieces)
        os << hololab::to_string(w) << " x " << m << " (levi dim " << hololab::levi_dim(ctx, w)
           << ")\n";
    os << "rank: " << f.rank() << "\n";
    return os.str();
}

// FNV-1a over the canonical invocation description
std::string cache_key(const std::string& canon) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct CacheConfig {
    std::string dir;
    bool verbose = false;
};

std::string run_cached(const CacheConfig& cache, const std::string& canon,
                       const std::function<std::string()>& compute) {
    if (cache.dir.empty()) return compute();
    std::string key = cache_key(std::string(kEngineVersion) + "|" + canon);
    std::filesystem::path path = std::filesystem::path(cache.dir) / (key + ".txt");
    std::string header = std::string("hololab-cache v1 ") + key + "\n";
    std::error_code ec;
    std::filesystem::create_directories(cache.dir, ec);

    if (std::ifstream in{path, std::ios::binary}; in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string blob = buf.str();
        if (blob.rfind(header, 0) == 0) {
            if (cache.verbose) std::cerr << "cache hit " << key << "\n";
            return blob.substr(header.size());
        }
        std::cerr << "warning: corrupt cache entry " << key << ", recomputing\n";
    } else if (cache.verbose) {
        std::cerr << "cache miss " << key << "\n";
    }

    std::string result = compute();
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    if (std::ofstream out{tmp, std::ios::binary}; out) {
        out << header << result;
        out.close();
        std::filesystem::rename(tmp, path, ec);
        if (ec) std::cerr << "warning: cache write failed, continuing uncached\n";
    } else {
        std::cerr << "warning: cache not writable, continuing uncached\n";
    }
    return result;
}

hololab::FilteredBundle parse_piece_bundle(const hololab::ParabolicMarking& marking,
                                           const std::vector<std::string>& piece_args) {
    hololab::FilteredBundle f{marking, {}, hololab::Provenance::custom, std::nullopt};
    for (const auto& raw : piece_args) {
        // grammar: [w1,...,wr]xMULT with the multiplicity suffix optional;
        // a bare coordinate list is also accepted (CLI11 unwraps [..] args)
        std::string p = raw;
        if (!p.empty() && p.front() != '[') p = "[" + p + "]";
        auto close = p.find(']');
        if (p.empty() || p.front() != '[' || close == std::string::npos)
            throw hololab::domain_error("piece '" + raw + "': expected [..] weight prefix");
        Weight w = hololab::parse_weight(p.substr(0, close + 1), marking.system.rank);
        long long mult = 1;
        if (close + 1 < p.size()) {
            if (p[close + 1] != 'x')
                throw hololab::domain_error("piece '" + p + "': expected 'x' at position " +
                                            std::to_string(close + 1));
            try {
                mult = std::stoll(p.substr(close + 2));
            } catch (const std::exception&) {
                throw hololab::domain_error("piece '" + p + "': invalid multiplicity");
            }
        }
        if (mult < 1) throw hololab::domain_error("piece multiplicity must be positive");
        if (!marking.levi().dominant_on_levi(w))
            throw hololab::domain_error("piece weight " + hololab::to_string(w) +
                                        " is not Levi-dominant");
        f.pieces.emplace_back(w, Int(mult));
    }
    if (f.pieces.empty()) throw hololab::domain_error("at least one --piece is required");
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"holonomy screening via homogeneous bundle cohomology"};
    app.require_subcommand(1);

    bool json = false;
    bool verbose = false;
    std::string cache_dir;
    if (const char* env = std::getenv("HOLOLAB_CACHE")) cache_dir = env;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_flag("--verbose", verbose, "report cache hits and misses on stderr");
    app.add_option("--cache-dir", cache_dir, "result cache directory (env HOLOLAB_CACHE)");

    std::string sys_arg, weight_arg, weight2_arg, marking_arg;
    int kmax = 3, sym_k = 1, jobs = 0, max_rank = 2, max_level = 3;
    long long dim_m = 0, dim_x = 0, rank_d = 0;
    std::vector<std::string> piece_args;

    auto* c_roots = app.add_subcommand("roots", "positive roots of a system");
    c_roots->add_option("system", sys_arg)->required();

    auto* c_dim = app.add_subcommand("dim", "Weyl dimension of a highest weight");
    c_dim->add_option("system", sys_arg)->required();
    c_dim->add_option("weight", weight_arg)->required();

    auto* c_tensor = app.add_subcommand("tensor", "tensor product decomposition");
    c_tensor->add_option("system", sys_arg)->required();
    c_tensor->add_option("v", weight_arg)->required();
    c_tensor->add_option("w", weight2_arg)->required();
    c_tensor->add_option("--marking", marking_arg, "restrict to the Levi of this marking");

    auto* c_sym = app.add_subcommand("sym", "symmetric power decomposition");
    c_sym->add_option("system", sys_arg)->required();
    c_sym->add_option("v", weight_arg)->required();
    c_sym->add_option("k", sym_k)->required()->check(CLI::PositiveNumber);
    c_sym->add_option("--marking", marking_arg, "restrict to the Levi of this marking");

    auto* c_bbw = app.add_subcommand("bbw", "cohomology of an irreducible bundle");
    c_bbw->add_option("system", sys_arg)->required();
    c_bbw->add_option("marking", marking_arg)->required();
    c_bbw->add_option("weight", weight_arg)->required();

    auto* c_cot = app.add_subcommand("cotangent", "cotangent bundle pieces of G/P");
    c_cot->add_option("system", sys_arg)->required();
    c_cot->add_option("marking", marking_arg)->required();

    auto* c_jet = app.add_subcommand("jet", "first jet bundle of a line bundle");
    c_jet->add_option("system", sys_arg)->required();
    c_jet->add_option("marking", marking_arg)->required();
    c_jet->add_option("weight", weight_arg)->required();

    auto* c_leg = app.add_subcommand("legendre", "Legendre invariants of (system, weight)");
    c_leg->add_option("system", sys_arg)->required();
    c_leg->add_option("weight", weight_arg)->required();
    c_leg->add_option("--kmax", kmax)->check(CLI::Range(1, 16));

    auto* c_kod = app.add_subcommand("kodaira", "Kodaira criteria for a normal bundle");
    c_kod->add_option("system", sys_arg)->required();
    c_kod->add_option("marking", marking_arg)->required();
    c_kod->add_option("--piece", piece_args, "bundle piece [w]xM, repeatable")->required();

    auto* c_tor = app.add_subcommand("torsion", "torsion number");
    c_tor->add_option("--dimM", dim_m)->required();
    c_tor->add_option("--dimX", dim_x)->required();
    c_tor->add_option("--rankD", rank_d)->required();

    auto* c_screen = app.add_subcommand("screen", "screen one candidate representation");
    c_screen->add_option("system", sys_arg)->required();
    c_screen->add_option("weight", weight_arg)->required();
    c_screen->add_option("--kmax", kmax)->check(CLI::Range(1, 16));

    auto* c_table = app.add_subcommand("table", "holonomy table dimensions");

    auto* c_sweep = app.add_subcommand("sweep", "screen all candidates within bounds");
    c_sweep->add_option("max_rank", max_rank)->required()->check(CLI::PositiveNumber);
    c_sweep->add_option("max_level", max_level)->required()->check(CLI::PositiveNumber);
    c_sweep->add_option("--kmax", kmax)->check(CLI::Range(1, 16));
    c_sweep->add_option("--jobs", jobs, "worker threads, default = hardware");

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CacheConfig cache{cache_dir, verbose};
    auto canon = [&](std::string op) {
        std::ostringstream os;
        os << op << "|" << sys_arg << "|" << weight_arg << "|" << weight2_arg << "|" << marking_arg
           << "|kmax=" << kmax << "|k=" << sym_k << "|rank=" << max_rank << "|level=" << max_level
           << "|dimM=" << dim_m << "|dimX=" << dim_x << "|rankD=" << rank_d << "|json=" << json;
        for (const auto& p : piece_args) os << "|piece=" << p;
        return os.str();
    };

    try {
        std::string out;
        if (*c_roots) {
            out = run_cached(cache, canon("roots"), [&] {
                auto rs = parse_system_arg(sys_arg);
                if (json) {
                    hololab::Json j;
                    j["system"] = rs.name();
                    j["count"] = rs.positive_roots.size();
                    j["positive_roots"] = rs.positive_roots;
                    return j.dump(2) + "\n";
                }
                std::ostringstream os;
                for (const auto& r : rs.positive_roots) {
                    os << "(";
                    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
                    os << ")\n";
                }
                os << "count: " << rs.positive_roots.size() << "\n";
                return os.str();
            });
        } else if (*c_dim) {
            out = run_cached(cache, canon("dim"), [&] {
                auto rs = parse_system_arg(sys_arg);
                Weight w = parse_weight_arg(weight_arg, rs.rank);
                Int d = hololab::weyl_dim(rs, w);
                if (json) {
                    hololab::Json j;
                    j["system"] = rs.name();
                    j["weight"] = w.coords;
                    j["dim"] = hololab::json_int(d);
                    return j.dump(2) + "\n";
                }
                return d.str() + "\n";
            });
        } else if (*c_tensor || *c_sym) {
            out = run_cached(cache, canon(*c_tensor ? "tensor" : "sym"), [&] {
                auto rs = parse_system_arg(sys_arg);
                hololab::LeviContext ctx =
                    marking_arg.empty()
                        ? hololab::full_context(rs)
                        : parse_marking_arg(marking_arg, rs).levi();
                Weight v = parse_weight_arg(weight_arg, rs.rank);
                hololab::ModuleDecomposition dec;
                if (*c_tensor) {
                    Weight w = parse_weight_arg(weight2_arg, rs.rank);
                    dec = hololab::tensor_decompose(ctx, v, w);
                } else {
                    dec = hololab::sym_power(ctx, v, sym_k);
                }
                if (json) return hololab::to_json(dec, ctx).dump(2) + "\n";
                std::ostringstream os;
                for (const auto& [w, m] : dec.terms)
                    os << hololab::to_string(w) << " x " << m << " (dim "
                       << hololab::levi_dim(ctx, w) << ")\n";
                return os.str();
            });
        } else if (*c_bbw) {
            out = run_cached(cache, canon("bbw"), [&] {
                auto rs = parse_system_arg(sys_arg);
                auto marking = parse_marking_arg(marking_arg, rs);
                Weight w = parse_weight_arg(weight_arg, rs.rank);
                auto rep = hololab::bbw_irreducible(marking, w);
                if (json) return hololab::to_json(rep).dump(2) + "\n";
                return report_line(rep) + "\n";
            });
        } else if (*c_cot || *c_jet) {
            out = run_cached(cache, canon(*c_cot ? "cotangent" : "jet"), [&] {
                auto rs = parse_system_arg(sys_arg);
                auto marking = parse_marking_arg(marking_arg, rs);
                hololab::FilteredBundle f =
                    *c_cot ? hololab::cotangent_bundle(marking)
                           : hololab::jet_bundle(hololab::make_datum(
                                 marking, parse_weight_arg(weight_arg, rs.rank)));
                if (json) {
                    hololab::Json j;
                    j["marking"] = hololab::marking_string(marking);
                    hololab::Json arr = hololab::Json::array();
                    auto ctx = marking.levi();
                    for (const auto& [w, m] : f.pieces) {
                        hololab::Json t;
                        t["weight"] = w.coords;
                        t["multiplicity"] = hololab::json_int(m);
                        t["dimension"] = hololab::json_int(hololab::levi_dim(ctx, w));
                        arr.push_back(std::move(t));
                    }
                    j["pieces"] = std::move(arr);
                    j["rank"] = hololab::json_int(f.rank());
                    return j.dump(2) + "\n";
                }
                return pieces_text(f);
            });
        } else if (*c_leg) {
            out = run_cached(cache, canon("legendre"), [&] {
                auto rs = parse_system_arg(sys_arg);
                Weight w = parse_weight_arg(weight_arg, rs.rank);
                auto marking = hololab::stabilizer_marking(rs, w);
                auto a = hololab::legendre_analyze(hololab::make_datum(marking, w), kmax);
                if (json) return hololab::to_json(a).dump(2) + "\n";
                std::ostringstream os;
                os << "dim_M: " << a.dim_m << "\n";
                os << "g_ind_dim: " << entry_str(a.g_ind_dim) << "\n";
                os << "conn_space_dim: " << entry_str(a.conn_space_dim) << "\n";
                os << "torsion_obstruction: " << entry_str(a.torsion_obstruction) << "\n";
                os << "curvature_space: " << entry_str(a.curvature_space) << "\n";
                for (const auto& lr : a.levels) os << "k=" << lr.k << " " << report_line(lr.report) << "\n";
                if (!a.complete) os << "incomplete: budget stopped after k=" << a.levels.size() << "\n";
                return os.str();
            });
        } else if (*c_kod) {
            out = run_cached(cache, canon("kodaira"), [&] {
                auto rs = parse_system_arg(sys_arg);
                auto marking = parse_marking_arg(marking_arg, rs);
                auto n = parse_piece_bundle(marking, piece_args);
                auto a = hololab::kodaira_analyze(n);
                if (json) return hololab::to_json(a).dump(2) + "\n";
                std::ostringstream os;
                os << "h1_N: " << entry_str(a.h1_n) << "\n";
                os << "obstruction1: " << entry_str(a.obstruction1) << "\n";
                os << "obstruction2: " << entry_str(a.obstruction2) << "\n";
                os << "g_dim: " << entry_str(a.g_dim) << "\n";
                os << "verdict: "
                   << (a.verdict == hololab::KodairaVerdict::one_flat_structure
                           ? "one_flat_structure"
                           : "inconclusive")
                   << "\n";
                return os.str();
            });
        } else if (*c_tor) {
            out = run_cached(cache, canon("torsion"), [&] {
                Int l = hololab::torsion_number(dim_m, dim_x, rank_d);
                if (json) {
                    hololab::Json j;
                    j["torsion_number"] = hololab::json_int(l);
                    j["flat_rank_D"] = hololab::json_int(hololab::flat_rank_d(dim_m, dim_x));
                    return j.dump(2) + "\n";
                }
                return l.str() + "\n";
            });
        } else if (*c_screen) {
            out = run_cached(cache, canon("screen"), [&] {
                auto rs = parse_system_arg(sys_arg);
                Weight w = parse_weight_arg(weight_arg, rs.rank);
                auto v = hololab::screen(hololab::make_candidate(rs, w), kmax);
                if (json) return hololab::to_json(v).dump(2) + "\n";
                std::ostringstream os;
                os << "candidate: " << rs.name() << " " << hololab::to_string(w) << " marking "
                   << hololab::marking_string(v.candidate.marking) << " dim_rep "
                   << v.candidate.dim_rep << "\n";
                os << "classification: " << hololab::to_string(v.classification) << "\n";
                if (v.enlargement_target_dim)
                    os << "enlargement_target_dim: " << *v.enlargement_target_dim << "\n";
                if (!v.diagnostic.empty()) os << "diagnostic: " << v.diagnostic << "\n";
                return os.str();
            });
        } else if (*c_table) {
            out = run_cached(cache, canon("table"), [&] {
                auto rows = hololab::table_dims();
                if (json) {
                    hololab::Json arr = hololab::Json::array();
                    for (const auto& r : rows) arr.push_back(hololab::to_json(r));
                    return arr.dump(2) + "\n";
                }
                std::ostringstream os;
                for (const auto& r : rows) {
                    os << r.group << " | " << r.printed_label << " | " << r.translated
                       << " | computed " << r.computed_dim << " | printed " << r.printed_dim
                       << (r.mismatch ? " | MISMATCH" : "") << "\n";
                }
                return os.str();
            });
        } else if (*c_sweep) {
            int effective_jobs =
                jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
            // jobs never changes results, so the cache key omits it
            out = run_cached(cache, canon("sweep"), [&] {
                auto verdicts = hololab::sweep(max_rank, max_level, kmax, effective_jobs);
                std::ostringstream os;
                for (const auto& v : verdicts) {
                    if (json) {
                        os << hololab::to_json(v).dump() << "\n";
                    } else {
                        os << v.candidate.system.name() << " "
                           << hololab::to_string(v.candidate.highest_weight) << " "
                           << hololab::marking_string(v.candidate.marking) << " dim_rep="
                           << v.candidate.dim_rep << " "
                           << hololab::to_string(v.classification);
                        if (v.enlargement_target_dim)
                            os << " target=" << *v.enlargement_target_dim;
                        os << "\n";
                    }
                }
                return os.str();
            });
        }
        std::cout << out;
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.msg << "\n";
        return 2;
    } catch (const hololab::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const hololab::budget_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
