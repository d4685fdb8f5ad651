#include "hyperfun/job.hpp"

#include "hyperfun/decomposition.hpp"
#include "hyperfun/helmholtz.hpp"
#include "hyperfun/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

namespace hyperfun {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Config access.

const json& require_field(const json& cfg, const char* key) {
    if (!cfg.is_object())
        throw ValidationError("config: expected a JSON object");
    auto it = cfg.find(key);
    if (it == cfg.end())
        throw ValidationError(std::string("config: missing field '") + key + "'");
    return *it;
}

double as_double(const json& v, const char* what) {
    if (!v.is_number())
        throw ValidationError(std::string("config: '") + what + "' must be a number");
    return v.get<double>();
}

int as_int(const json& v, const char* what) {
    if (!v.is_number_integer())
        throw ValidationError(std::string("config: '") + what + "' must be an integer");
    return v.get<int>();
}

std::vector<double> as_double_vec(const json& v, const char* what) {
    if (!v.is_array())
        throw ValidationError(std::string("config: '") + what + "' must be an array");
    std::vector<double> out;
    for (const auto& e : v) out.push_back(as_double(e, what));
    return out;
}

Truncation parse_truncation(const json& cfg) {
    Truncation t;
    if (!cfg.is_object() || !cfg.contains("truncation")) return t;
    const json& tj = cfg.at("truncation");
    if (!tj.is_object())
        throw ValidationError("config: 'truncation' must be an object");
    for (const auto& [key, value] : tj.items()) {
        if (key == "rel_tol") {
            t.rel_tol = as_double(value, "truncation.rel_tol");
            if (!(t.rel_tol > 0.0))
                throw ValidationError("config: truncation.rel_tol must be positive");
        } else if (key == "max_total_order") {
            t.max_total_order = as_int(value, "truncation.max_total_order");
            if (t.max_total_order < 1)
                throw ValidationError("config: truncation.max_total_order must be >= 1");
        } else if (key == "term_cap") {
            t.term_cap = as_int(value, "truncation.term_cap");
            if (t.term_cap < 1)
                throw ValidationError("config: truncation.term_cap must be >= 1");
        } else if (key == "outer_max_order") {
            t.outer_max_order = as_int(value, "truncation.outer_max_order");
            if (t.outer_max_order < 1)
                throw ValidationError("config: truncation.outer_max_order must be >= 1");
        } else if (key == "tail_budget") {
            t.tail_budget = as_double(value, "truncation.tail_budget");
            if (!(t.tail_budget >= 0.0))
                throw ValidationError("config: truncation.tail_budget must be >= 0");
        } else {
            throw ValidationError("config: unknown truncation field '" + key + "'");
        }
    }
    return t;
}

HaParams parse_params(const json& cfg) {
    const json& pj = require_field(cfg, "params");
    HaParams p;
    p.a = as_double(require_field(pj, "a"), "params.a");
    p.b = as_double_vec(require_field(pj, "b"), "params.b");
    p.c = as_double_vec(require_field(pj, "c"), "params.c");
    p.validate();
    return p;
}

SingularConfig parse_singular(const json& cfg) {
    const json& sj = require_field(cfg, "config");
    SingularConfig s;
    s.m = as_int(require_field(sj, "m"), "config.m");
    s.n = as_int(require_field(sj, "n"), "config.n");
    s.alpha = as_double_vec(require_field(sj, "alpha"), "config.alpha");
    if (sj.contains("lambda_sq"))
        s.lambda_sq = as_double_vec(sj.at("lambda_sq"), "config.lambda_sq");
    s.validate();
    return s;
}

std::vector<int> parse_k_list(const json& cfg, int n, int default_k, bool default_all) {
    std::vector<int> ks;
    if (cfg.contains("k")) {
        const json& kj = cfg.at("k");
        if (kj.is_string()) {
            if (kj.get<std::string>() != "all")
                throw ValidationError("config: 'k' must be an integer or \"all\"");
            for (int k = 0; k <= n; ++k) ks.push_back(k);
        } else {
            int k = as_int(kj, "k");
            if (k < 0 || k > n)
                throw ValidationError("config: 'k' must lie in [0, n]");
            ks.push_back(k);
        }
    } else if (default_all) {
        for (int k = 0; k <= n; ++k) ks.push_back(k);
    } else {
        ks.push_back(default_k);
    }
    return ks;
}

std::vector<std::vector<double>> parse_point_rows(const json& cfg, int dim) {
    std::vector<std::vector<double>> rows;
    if (cfg.contains("points")) {
        const json& pj = cfg.at("points");
        if (!pj.is_array())
            throw ValidationError("config: 'points' must be an array of rows");
        for (const auto& row : pj) {
            std::vector<double> r = as_double_vec(row, "points row");
            if (static_cast<int>(r.size()) != dim)
                throw ValidationError("config: each point needs " +
                                      std::to_string(dim) + " coordinates");
            rows.push_back(std::move(r));
        }
    } else if (cfg.contains("axes")) {
        const json& aj = cfg.at("axes");
        if (!aj.is_array() || static_cast<int>(aj.size()) != dim)
            throw ValidationError("config: 'axes' must list one axis per coordinate (" +
                                  std::to_string(dim) + ")");
        std::vector<double> from, to;
        std::vector<int> count;
        size_t total = 1;
        for (const auto& ax : aj) {
            from.push_back(as_double(require_field(ax, "from"), "axes.from"));
            to.push_back(as_double(require_field(ax, "to"), "axes.to"));
            int c = as_int(require_field(ax, "count"), "axes.count");
            if (c < 1) throw ValidationError("config: axes.count must be >= 1");
            count.push_back(c);
            total *= static_cast<size_t>(c);
            if (total > 1000000)
                throw ValidationError("config: grid exceeds 1e6 points");
        }
        std::vector<int> idx(static_cast<size_t>(dim), 0);
        while (true) {
            std::vector<double> row(static_cast<size_t>(dim));
            for (int d = 0; d < dim; ++d) {
                int c = count[static_cast<size_t>(d)];
                double f = from[static_cast<size_t>(d)];
                double tt = to[static_cast<size_t>(d)];
                row[static_cast<size_t>(d)] =
                    (c == 1) ? f
                             : f + (tt - f) * idx[static_cast<size_t>(d)] / (c - 1);
            }
            rows.push_back(std::move(row));
            int d = dim - 1;
            while (d >= 0 && ++idx[static_cast<size_t>(d)] == count[static_cast<size_t>(d)]) {
                idx[static_cast<size_t>(d)] = 0;
                --d;
            }
            if (d < 0) break;
        }
    } else {
        throw ValidationError("config: provide 'points' or 'axes'");
    }
    if (rows.empty()) throw ValidationError("config: no evaluation points given");
    return rows;
}

// ---------------------------------------------------------------------------
// Deterministic parallel evaluation: contiguous static chunks, results land
// in a preallocated slot per index, output is written serially afterwards.

int worker_count(size_t jobs) {
    int limit;
    const char* env = std::getenv("HYPERFUN_THREADS");
    if (env != nullptr) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw ValidationError("HYPERFUN_THREADS must be a positive integer");
        limit = static_cast<int>(v);
    } else {
        unsigned hc = std::thread::hardware_concurrency();
        limit = static_cast<int>(hc == 0 ? 1 : std::min(hc, 8u));
    }
    return static_cast<int>(std::min<size_t>(static_cast<size_t>(limit), jobs));
}

template <typename Fn>
void parallel_map(size_t count, Fn&& fn) {
    if (count == 0) return;
    int workers = worker_count(count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    size_t chunk = (count + static_cast<size_t>(workers) - 1) / static_cast<size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        size_t lo = static_cast<size_t>(w) * chunk;
        size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi]() {
            try {
                for (size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// Output.

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out << ',';
        out << cells[i];
    }
    out << '\n';
}

void write_json(std::ostream& out, const json& doc) {
    out << doc.dump(2) << '\n';
}

double guarded_relative(double reference, double other) {
    double denom = std::max(std::abs(reference), 1e-300);
    return std::abs(reference - other) / denom;
}

// ---------------------------------------------------------------------------
// Commands.

int cmd_eval_ha(const json& cfg, std::ostream& out) {
    HaParams params = parse_params(cfg);
    int p = as_int(require_field(cfg, "p"), "p");
    if (p < 0) throw ValidationError("config: 'p' must be >= 0");
    Truncation t = parse_truncation(cfg);
    int n = params.n();
    auto rows = parse_point_rows(cfg, n + p);

    std::vector<double> values(rows.size());
    parallel_map(rows.size(), [&](size_t i) {
        EvalPoint pt;
        pt.xi.assign(rows[i].begin(), rows[i].begin() + n);
        pt.eta.assign(rows[i].begin() + n, rows[i].end());
        values[i] = ha_eval(params, pt, t);
    });

    std::vector<std::string> header;
    for (int l = 1; l <= n; ++l) header.push_back("xi" + std::to_string(l));
    for (int j = 1; j <= p; ++j) header.push_back("eta" + std::to_string(j));
    header.push_back("value");
    write_csv_row(out, header);
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> cells;
        for (double v : rows[i]) cells.push_back(fmt17(v));
        cells.push_back(fmt17(values[i]));
        write_csv_row(out, cells);
    }
    return 0;
}

int cmd_eval_fa(const json& cfg, std::ostream& out) {
    HaParams params = parse_params(cfg);
    Truncation t = parse_truncation(cfg);
    int n = params.n();
    auto rows = parse_point_rows(cfg, n);

    std::vector<double> values(rows.size());
    parallel_map(rows.size(), [&](size_t i) {
        values[i] = lauricella_fa(params, rows[i], t);
    });

    std::vector<std::string> header;
    for (int l = 1; l <= n; ++l) header.push_back("x" + std::to_string(l));
    header.push_back("value");
    write_csv_row(out, header);
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> cells;
        for (double v : rows[i]) cells.push_back(fmt17(v));
        cells.push_back(fmt17(values[i]));
        write_csv_row(out, cells);
    }
    return 0;
}

int cmd_eval_q(const json& cfg, std::ostream& out) {
    SingularConfig scfg = parse_singular(cfg);
    std::vector<double> x0 = as_double_vec(require_field(cfg, "x0"), "x0");
    if (static_cast<int>(x0.size()) != scfg.m)
        throw ValidationError("config: 'x0' needs m coordinates");
    std::vector<int> ks = parse_k_list(cfg, scfg.n, 0, true);
    Truncation t = parse_truncation(cfg);
    auto rows = parse_point_rows(cfg, scfg.m);

    size_t jobs = rows.size() * ks.size();
    std::vector<double> values(jobs);
    parallel_map(jobs, [&](size_t i) {
        size_t pi = i / ks.size();
        int k = ks[i % ks.size()];
        values[i] = fundamental_solution(scfg, {rows[pi], x0}, k, t);
    });

    std::vector<std::string> header;
    for (int i = 1; i <= scfg.m; ++i) header.push_back("x" + std::to_string(i));
    header.push_back("k");
    header.push_back("value");
    write_csv_row(out, header);
    for (size_t pi = 0; pi < rows.size(); ++pi)
        for (size_t kj = 0; kj < ks.size(); ++kj) {
            std::vector<std::string> cells;
            for (double v : rows[pi]) cells.push_back(fmt17(v));
            cells.push_back(std::to_string(ks[kj]));
            cells.push_back(fmt17(values[pi * ks.size() + kj]));
            write_csv_row(out, cells);
        }
    return 0;
}

int cmd_verify_pde(const json& cfg, std::ostream& out) {
    SingularConfig scfg = parse_singular(cfg);
    std::vector<double> x0 = as_double_vec(require_field(cfg, "x0"), "x0");
    if (static_cast<int>(x0.size()) != scfg.m)
        throw ValidationError("config: 'x0' needs m coordinates");
    std::vector<int> ks = parse_k_list(cfg, scfg.n, 0, true);
    Truncation t = parse_truncation(cfg);
    auto rows = parse_point_rows(cfg, scfg.m);
    double threshold = cfg.contains("threshold")
                           ? as_double(cfg.at("threshold"), "threshold")
                           : 1e-5;
    double h_override = cfg.contains("h") ? as_double(cfg.at("h"), "h") : 0.0;

    size_t jobs = rows.size() * ks.size();
    std::vector<ResidualReport> reports(jobs);
    parallel_map(jobs, [&](size_t i) {
        size_t pi = i / ks.size();
        int k = ks[i % ks.size()];
        const std::vector<double>& x = rows[pi];
        double h = h_override;
        if (h == 0.0) {
            double mx = 1.0;
            for (double v : x) mx = std::max(mx, std::abs(v));
            h = 1e-4 * mx;
        }
        auto u = [&](const std::vector<double>& xx) {
            return fundamental_solution(scfg, {xx, x0}, k, t);
        };
        reports[i] = helmholtz_residual(scfg, u, x, h);
    });

    json results = json::array();
    double max_rel = 0.0;
    for (size_t i = 0; i < jobs; ++i) {
        const ResidualReport& r = reports[i];
        max_rel = std::max(max_rel, r.relative());
        results.push_back({{"point", rows[i / ks.size()]},
                           {"k", ks[i % ks.size()]},
                           {"residual", r.residual},
                           {"scale", r.scale},
                           {"relative", r.relative()},
                           {"step", r.step},
                           {"order_estimate", r.order_estimate}});
    }
    bool pass = max_rel <= threshold;
    write_json(out, {{"command", "verify-pde"},
                     {"results", results},
                     {"max_relative", max_rel},
                     {"threshold", threshold},
                     {"pass", pass}});
    return pass ? 0 : 3;
}

int cmd_verify_system(const json& cfg, std::ostream& out) {
    HaParams params = parse_params(cfg);
    int p = as_int(require_field(cfg, "p"), "p");
    if (p < 0) throw ValidationError("config: 'p' must be >= 0");
    std::vector<int> ks = parse_k_list(cfg, params.n(), 0, true);
    Truncation t = parse_truncation(cfg);
    int n = params.n();
    auto rows = parse_point_rows(cfg, n + p);
    double threshold = cfg.contains("threshold")
                           ? as_double(cfg.at("threshold"), "threshold")
                           : 1e-9;

    size_t jobs = rows.size() * ks.size();
    std::vector<std::vector<ResidualReport>> reports(jobs);
    parallel_map(jobs, [&](size_t i) {
        size_t pi = i / ks.size();
        int k = ks[i % ks.size()];
        EvalPoint pt;
        pt.xi.assign(rows[pi].begin(), rows[pi].begin() + n);
        pt.eta.assign(rows[pi].begin() + n, rows[pi].end());
        reports[i] = hypergeometric_system_residual(params, pt, k, t);
    });

    json results = json::array();
    double max_rel = 0.0;
    for (size_t i = 0; i < jobs; ++i) {
        for (size_t eq = 0; eq < reports[i].size(); ++eq) {
            const ResidualReport& r = reports[i][eq];
            max_rel = std::max(max_rel, r.relative());
            results.push_back({{"point", rows[i / ks.size()]},
                               {"k", ks[i % ks.size()]},
                               {"equation", eq},
                               {"residual", r.residual},
                               {"scale", r.scale},
                               {"relative", r.relative()}});
        }
    }
    bool pass = max_rel <= threshold;
    write_json(out, {{"command", "verify-system"},
                     {"results", results},
                     {"max_relative", max_rel},
                     {"threshold", threshold},
                     {"pass", pass}});
    return pass ? 0 : 3;
}

int cmd_verify_decomposition(const json& cfg, std::ostream& out) {
    std::string target = require_field(cfg, "target").get<std::string>();
    HaParams params = parse_params(cfg);
    Truncation t = parse_truncation(cfg);
    int n = params.n();
    double threshold = cfg.contains("threshold")
                           ? as_double(cfg.at("threshold"), "threshold")
                           : 1e-8;

    json results = json::array();
    double max_rel = 0.0;

    if (target == "fa") {
        auto rows = parse_point_rows(cfg, n);
        struct Row {
            double direct, decomposed, transformed, recursive;
        };
        std::vector<Row> vals(rows.size());
        bool with_recursive = (n == 2 || n == 3);
        parallel_map(rows.size(), [&](size_t i) {
            vals[i].direct = lauricella_fa(params, rows[i], t);
            vals[i].decomposed = fa_decomposed(params, rows[i], t);
            vals[i].transformed = fa_decomposed_transformed(params, rows[i], t);
            vals[i].recursive =
                with_recursive ? fa_recursive(params, rows[i], t) : 0.0;
        });
        for (size_t i = 0; i < rows.size(); ++i) {
            double rel = std::max(guarded_relative(vals[i].direct, vals[i].decomposed),
                                  guarded_relative(vals[i].direct, vals[i].transformed));
            if (with_recursive)
                rel = std::max(rel, guarded_relative(vals[i].direct, vals[i].recursive));
            max_rel = std::max(max_rel, rel);
            json entry = {{"point", rows[i]},
                          {"direct", vals[i].direct},
                          {"decomposed", vals[i].decomposed},
                          {"transformed", vals[i].transformed},
                          {"max_relative_difference", rel}};
            if (with_recursive) entry["recursive"] = vals[i].recursive;
            results.push_back(entry);
        }
    } else if (target == "ha") {
        int p = as_int(require_field(cfg, "p"), "p");
        if (p < 0) throw ValidationError("config: 'p' must be >= 0");
        auto rows = parse_point_rows(cfg, n + p);
        std::vector<std::pair<double, double>> vals(rows.size());
        parallel_map(rows.size(), [&](size_t i) {
            EvalPoint pt;
            pt.xi.assign(rows[i].begin(), rows[i].begin() + n);
            pt.eta.assign(rows[i].begin() + n, rows[i].end());
            vals[i] = {ha_eval(params, pt, t), ha_decomposed(params, pt, t)};
        });
        for (size_t i = 0; i < rows.size(); ++i) {
            double rel = guarded_relative(vals[i].first, vals[i].second);
            max_rel = std::max(max_rel, rel);
            results.push_back({{"point", rows[i]},
                               {"direct", vals[i].first},
                               {"decomposed", vals[i].second},
                               {"max_relative_difference", rel}});
        }
    } else {
        throw ValidationError("config: 'target' must be \"fa\" or \"ha\"");
    }

    bool pass = max_rel <= threshold;
    write_json(out, {{"command", "verify-decomposition"},
                     {"results", results},
                     {"max_relative", max_rel},
                     {"threshold", threshold},
                     {"pass", pass}});
    return pass ? 0 : 3;
}

int cmd_singularity_scan(const json& cfg, std::ostream& out) {
    SingularConfig scfg = parse_singular(cfg);
    std::vector<double> x0 = as_double_vec(require_field(cfg, "x0"), "x0");
    std::vector<double> direction =
        as_double_vec(require_field(cfg, "direction"), "direction");
    std::vector<double> radii = as_double_vec(require_field(cfg, "radii"), "radii");
    std::vector<int> ks = parse_k_list(cfg, scfg.n, 0, false);
    if (ks.size() != 1)
        throw ValidationError("config: singularity-scan takes a single 'k'");
    int k = ks[0];
    Truncation t = parse_truncation(cfg);

    auto samples = singularity_probe(scfg, x0, direction, radii, k, t);

    double target;
    if (k == 0) {
        target = probe_limit(scfg);
    } else {
        // No closed-form limit for k >= 1: anchor the gap column to the value
        // nearest the singularity so the trend stays interpretable.
        size_t best = 0;
        for (size_t i = 1; i < samples.size(); ++i)
            if (samples[i].radius < samples[best].radius) best = i;
        target = samples[best].scaled;
    }

    write_csv_row(out, {"radius", "scaled", "target", "relative_gap"});
    for (const auto& s : samples) {
        double gap = (target != 0.0) ? (s.scaled - target) / target
                                     : s.scaled;
        write_csv_row(out, {fmt17(s.radius), fmt17(s.scaled), fmt17(target),
                            fmt17(gap)});
    }
    return 0;
}

int dispatch(const std::string& command, const json& cfg, std::ostream& out) {
    if (command == "eval-ha") return cmd_eval_ha(cfg, out);
    if (command == "eval-fa") return cmd_eval_fa(cfg, out);
    if (command == "eval-q") return cmd_eval_q(cfg, out);
    if (command == "verify-pde") return cmd_verify_pde(cfg, out);
    if (command == "verify-system") return cmd_verify_system(cfg, out);
    if (command == "verify-decomposition") return cmd_verify_decomposition(cfg, out);
    if (command == "singularity-scan") return cmd_singularity_scan(cfg, out);
    throw ValidationError("unknown command '" + command + "'");
}

void error_record(std::ostream& err, const char* type, const std::string& message) {
    json rec = {{"error", {{"type", type}, {"message", message}}}};
    err << rec.dump() << '\n';
}

}  // namespace

bool is_known_command(const std::string& command) {
    return command == "eval-ha" || command == "eval-fa" || command == "eval-q" ||
           command == "verify-pde" || command == "verify-system" ||
           command == "verify-decomposition" || command == "singularity-scan";
}

int run_job(const std::string& command, const nlohmann::json& config,
            const std::string& output_override, std::ostream& fallback_out,
            std::ostream& err) {
    try {
        std::string path = output_override;
        if (path.empty() && config.is_object() && config.contains("output")) {
            const json& oj = config.at("output");
            if (!oj.is_string())
                throw ValidationError("config: 'output' must be a string path");
            path = oj.get<std::string>();
        }
        std::ofstream file;
        std::ostream* out = &fallback_out;
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file)
                throw ValidationError("cannot open output file '" + path + "'");
            out = &file;
        }
        int code = dispatch(command, config, *out);
        out->flush();
        if (!*out) throw ValidationError("failed writing output");
        return code;
    } catch (const ValidationError& e) {
        error_record(err, "validation", e.what());
        return 2;
    } catch (const DomainError& e) {
        error_record(err, "domain", e.what());
        return 3;
    } catch (const PoleError& e) {
        error_record(err, "pole", e.what());
        return 3;
    } catch (const ConvergenceError& e) {
        error_record(err, "convergence", e.what());
        return 3;
    } catch (const nlohmann::json::exception& e) {
        error_record(err, "validation", e.what());
        return 2;
    } catch (const std::exception& e) {
        error_record(err, "internal", e.what());
        return 3;
    }
}

}  // namespace hyperfun
