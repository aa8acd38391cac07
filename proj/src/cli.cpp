#include "towers/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "towers/errors.hpp"
#include "towers/gallery.hpp"
#include "towers/identities.hpp"
#include "towers/json_io.hpp"
#include "towers/series_engine.hpp"

namespace towers {
namespace {

enum class Format { Json, Csv, Text };

struct Common {
    std::string sizes = "2";
    std::string rule = "all";
    std::string shape = "tower";
    std::string out_path;
    std::string format = "json";

    PieceSet pieces() const { return PieceSet::parse(sizes, parse_interface_rule(rule)); }
    ShapeClass shape_class() const { return parse_shape(shape); }
    Format output_format() const {
        if (format == "json") return Format::Json;
        if (format == "csv") return Format::Csv;
        if (format == "text") return Format::Text;
        throw InputError("unknown format '" + format + "' (expected json|csv|text)");
    }
};

/// Either the --out file or the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            stream_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw InputError("cannot write '" + path + "'");
        stream_ = file_.get();
    }
    std::ostream& operator*() { return *stream_; }
    void close() {
        stream_->flush();
        if (!*stream_) throw InputError("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

unsigned thread_count() {
    const char* env = std::getenv("TOWERS_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw InputError("TOWERS_THREADS must be a non-negative integer");
    return static_cast<unsigned>(std::min(v, 256L));
}

void add_common(CLI::App* sub, Common& c, bool with_pieces = true) {
    if (with_pieces) {
        sub->add_option("--sizes", c.sizes, "comma-separated piece sizes S")->capture_default_str();
        sub->add_option("--rule", c.rule, "interface rule: all|noalign")->capture_default_str();
        sub->add_option("--shape", c.shape, "tower|pyramid|half")->capture_default_str();
    }
    sub->add_option("--out", c.out_path, "output file (default stdout)");
    sub->add_option("--format", c.format, "json|csv|text")->capture_default_str();
}

void write_json(Sink& sink, const Json& j) { *sink << j.dump(2) << '\n'; }

void write_indexed(Sink& sink, Format f, const std::vector<std::pair<long long, std::string>>& rows,
                   const char* header) {
    if (f == Format::Csv) *sink << "n," << header << '\n';
    for (const auto& [n, v] : rows) *sink << n << (f == Format::Csv ? "," : " ") << v << '\n';
}

std::string t_poly_string(const IntPoly& p) {
    std::ostringstream s;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const BigInt& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        BigInt a = abs(c);
        s << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1 || i == 0) s << a << (i > 0 ? "*" : "");
        if (i > 0) s << 't' << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return s.str();
}

std::string bivariate_string(const BivariatePolynomial& q) {
    std::ostringstream s;
    bool first = true;
    for (int j = q.degree(); j >= 0; --j) {
        const IntPoly& c = q.coeffs()[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        s << (first ? "" : " + ") << '(' << t_poly_string(c) << ')';
        if (j > 0) s << "*y" << (j > 1 ? "^" + std::to_string(j) : "");
        first = false;
    }
    return first ? "0" : s.str();
}

// ---- subcommands ----------------------------------------------------------

struct EnumerateArgs {
    Common c;
    int pieces = 0;
    int area = 0;
    bool weighted = false;
    bool list = false;
};

void run_enumerate(const EnumerateArgs& a, std::ostream& out) {
    const PieceSet pieces = a.c.pieces();
    const Format f = a.c.output_format();
    EnumerationQuery q{pieces, a.c.shape_class(), a.area > 0 ? BoundKind::ByArea : BoundKind::ByPieceCount,
                       a.area > 0 ? a.area : a.pieces, a.weighted};
    if (q.bound < 1) throw InputError("give a positive --pieces or --area bound");
    if (a.weighted && q.bound_kind != BoundKind::ByArea) throw InputError("--weighted needs --area");
    Sink sink(a.c.out_path, out);
    if (a.list) {
        if (f == Format::Json) {
            *sink << "{\n  \"sizes\": " << Json(pieces.sizes()).dump() << ",\n  \"rule\": \""
                  << to_string(pieces.rule()) << "\",\n  \"shape\": \"" << to_string(q.shape) << "\",\n  \"towers\": [";
            bool first = true;
            enumerate_towers(q, [&](const Tower& t) {
                *sink << (first ? "\n    " : ",\n    ") << tower_to_json(t).dump();
                first = false;
            });
            *sink << (first ? "]\n}\n" : "\n  ]\n}\n");
        } else {
            enumerate_towers(q, [&](const Tower& t) { *sink << t.to_string() << '\n'; });
        }
    } else if (a.weighted) {
        const auto w = weight_polynomial(q);
        if (f == Format::Json) {
            write_json(sink, weights_to_json(q, w));
        } else {
            std::vector<std::pair<long long, std::string>> rows;
            for (const auto& [n, p] : w) rows.emplace_back(n, p.to_string(pieces.sizes()));
            write_indexed(sink, f, rows, "weight");
        }
    } else {
        const auto counts = count_towers(q, thread_count());
        if (f == Format::Json) {
            write_json(sink, counts_to_json(q, counts));
        } else {
            std::vector<std::pair<long long, std::string>> rows;
            for (const auto& [n, v] : counts) rows.emplace_back(n, to_decimal(v));
            write_indexed(sink, f, rows, "count");
        }
    }
    sink.close();
}

struct SeriesArgs {
    Common c;
    int order = 200;
    bool weighted = false;
    bool by_pieces = false;
    bool as_sequence = false;
    std::string markers = "per-size";
};

void run_series(const SeriesArgs& a, std::ostream& out) {
    const PieceSet pieces = a.c.pieces();
    const ShapeClass shape = a.c.shape_class();
    const Format f = a.c.output_format();
    if (a.order < 0) throw InputError("--order must be non-negative");
    const auto order = static_cast<std::size_t>(a.order);
    Sink sink(a.c.out_path, out);

    if (a.weighted) {
        MarkerMode mode;
        if (a.markers == "per-size") mode = MarkerMode::PerSize;
        else if (a.markers == "shared") mode = MarkerMode::Shared;
        else throw InputError("--markers must be per-size or shared");
        const auto s = solve_all_shapes_weighted(pieces, order, mode).of(shape);
        const std::vector<int> labels = mode == MarkerMode::Shared ? std::vector<int>{0} : pieces.sizes();
        if (f == Format::Json) {
            write_json(sink, weighted_series_to_json(s, labels));
        } else {
            std::vector<std::pair<long long, std::string>> rows;
            for (std::size_t i = 0; i <= order; ++i) rows.emplace_back(static_cast<long long>(i), s[i].to_string(labels));
            write_indexed(sink, f, rows, "coefficient");
        }
        sink.close();
        return;
    }

    std::optional<Sequence> seq;
    if (a.by_pieces) {
        std::vector<BigInt> terms;
        if (pieces.is_single_size()) {
            const auto s = solve_all_shapes(pieces, order * static_cast<std::size_t>(pieces.max_size())).of(shape);
            terms = coefficients_by_pieces(s, pieces);
        } else {
            const auto s = solve_all_shapes_by_pieces(pieces, order).of(shape);
            terms.assign(s.coeffs().begin() + 1, s.coeffs().end());
        }
        seq = Sequence{1, std::move(terms), pieces.describe() + " " + std::string(to_string(shape)) + " by pieces"};
    }
    IntegerSeries s;
    if (!seq) {
        s = solve_all_shapes(pieces, order).of(shape);
        if (a.as_sequence)
            seq = Sequence{1, {s.coeffs().begin() + 1, s.coeffs().end()},
                           pieces.describe() + " " + std::string(to_string(shape)) + " by area"};
    }
    if (seq) {
        if (f == Format::Json) {
            write_json(sink, sequence_to_json(*seq));
        } else {
            std::vector<std::pair<long long, std::string>> rows;
            for (std::size_t i = 0; i < seq->terms.size(); ++i)
                rows.emplace_back(seq->offset + static_cast<long long>(i), to_decimal(seq->terms[i]));
            write_indexed(sink, f, rows, "a(n)");
        }
    } else if (f == Format::Json) {
        write_json(sink, series_to_json(s));
    } else {
        std::vector<std::pair<long long, std::string>> rows;
        for (std::size_t i = 0; i <= order; ++i) rows.emplace_back(static_cast<long long>(i), to_decimal(s[i]));
        write_indexed(sink, f, rows, "coefficient");
    }
    sink.close();
}

struct EliminateArgs {
    Common c;
    int verify_order = 200;
    int max_degree = 12;
};

void run_eliminate(const EliminateArgs& a, std::ostream& out) {
    const PieceSet pieces = a.c.pieces();
    const ShapeClass shape = a.c.shape_class();
    if (a.verify_order < 1) throw InputError("--verify-order must be positive");
    EliminationOptions opt;
    opt.max_degree = a.max_degree;
    const auto q = annihilating_polynomial(pieces, shape, static_cast<std::size_t>(a.verify_order), opt);
    Sink sink(a.c.out_path, out);
    if (a.c.output_format() == Format::Json) {
        Json j = polynomial_to_json(q);
        j["sizes"] = pieces.sizes();
        j["rule"] = to_string(pieces.rule());
        j["shape"] = to_string(shape);
        j["verified_to_order"] = a.verify_order;
        write_json(sink, j);
    } else {
        *sink << bivariate_string(q) << '\n';
    }
    sink.close();
}

struct GuessArgs {
    Common c;
    std::string seq_path;
    int max_order = -1;
    int max_degree = -1;
    int guard = 10;
    int use = 0;
    int max_total = 24;
};

int run_guess(const GuessArgs& a, std::ostream& out, std::ostream& err) {
    const Sequence full = sequence_from_json(read_json_file(a.seq_path));
    if (a.use < 0) throw InputError("--use must be non-negative");
    Sequence prefix = full;
    if (a.use > 0 && static_cast<std::size_t>(a.use) < full.terms.size()) prefix.terms.resize(static_cast<std::size_t>(a.use));

    std::optional<Recurrence> rec;
    if (a.max_order >= 0 || a.max_degree >= 0) {
        if (a.max_order < 1 || a.max_degree < 0) throw InputError("give both --max-order >= 1 and --max-degree >= 0");
        rec = guess_recurrence(prefix, a.max_order, a.max_degree, a.guard);
    } else {
        rec = guess_recurrence_auto(prefix, a.guard, a.max_total);
    }
    if (!rec) {
        err << "towers: no recurrence found within the search bounds\n";
        return kExitNoRecurrence;
    }
    if (prefix.terms.size() < full.terms.size() && !verify_recurrence(*rec, full))
        throw ConsistencyError("guessed recurrence fails on the held-out terms beyond --use");

    Sink sink(a.c.out_path, out);
    if (a.c.output_format() == Format::Json) {
        write_json(sink, recurrence_to_json(*rec));
    } else {
        for (int j = 0; j <= rec->order; ++j) {
            IntPoly p(rec->coeffs[static_cast<std::size_t>(j)]);
            std::string s = t_poly_string(p);
            std::replace(s.begin(), s.end(), 't', 'n');
            *sink << (j ? " + " : "") << '(' << s << ")*a(n" << (j ? "+" + std::to_string(j) : "") << ')';
        }
        *sink << " = 0\n";
    }
    sink.close();
    return kExitOk;
}

struct ExtendArgs {
    Common c;
    std::string rec_path;
    std::string init_path;
    long long terms = 0;
};

void run_extend(const ExtendArgs& a, std::ostream& out) {
    const Recurrence rec = recurrence_from_json(read_json_file(a.rec_path));
    const Sequence init = sequence_from_json(read_json_file(a.init_path));
    if (a.terms < 1) throw InputError("--terms must be positive");
    const auto target = static_cast<std::size_t>(a.terms);
    const Format f = a.c.output_format();
    Sink sink(a.c.out_path, out);
    const std::size_t keep = std::min(target, init.terms.size());
    if (f == Format::Json) {
        SequenceWriter w(*sink, init.offset, init.label.empty() ? "extended by recurrence" : init.label);
        for (std::size_t i = 0; i < keep; ++i) w.push(init.terms[i]);
        for_each_extension(rec, init, target, [&](long long, const BigInt& v) { w.push(v); });
        w.finish();
    } else {
        if (f == Format::Csv) *sink << "n,a(n)\n";
        const char sep = f == Format::Csv ? ',' : ' ';
        for (std::size_t i = 0; i < keep; ++i) *sink << init.offset + static_cast<long long>(i) << sep << init.terms[i] << '\n';
        for_each_extension(rec, init, target, [&](long long n, const BigInt& v) { *sink << n << sep << v << '\n'; });
    }
    sink.close();
}

struct AsymptArgs {
    Common c;
    std::string seq_path;
    int depth = 4;
};

void run_asympt(const AsymptArgs& a, std::ostream& out) {
    const Sequence s = sequence_from_json(read_json_file(a.seq_path));
    const auto est = estimate_asymptotics(s, a.depth);
    Sink sink(a.c.out_path, out);
    const Json j = asymptotics_to_json(est);
    if (a.c.output_format() == Format::Json) {
        write_json(sink, j);
    } else {
        const char sep = a.c.output_format() == Format::Csv ? ',' : '=';
        if (a.c.output_format() == Format::Csv) *sink << "key,value\n";
        *sink << "mu" << sep << j["mu"].get<std::string>() << '\n'
              << "theta" << sep << j["theta"].get<std::string>() << '\n'
              << "mu_stability" << sep << j["stability"]["mu"].get<std::string>() << '\n'
              << "theta_stability" << sep << j["stability"]["theta"].get<std::string>() << '\n';
        if (est.amplitude) *sink << "c_amplitude" << sep << j["c_amplitude"].get<std::string>() << '\n';
        *sink << "note" << sep << "empirical\n";
    }
    sink.close();
}

struct RenderArgs {
    Common c;
    int pieces = 0;
};

void run_render(const RenderArgs& a, std::ostream& out) {
    if (a.c.out_path.empty()) throw InputError("render needs --out");
    const PieceSet pieces = a.c.pieces();
    const ShapeClass shape = a.c.shape_class();
    const std::size_t count = render_gallery(pieces, shape, a.pieces, a.c.out_path);
    Json j;
    j["path"] = a.c.out_path;
    j["count"] = count;
    if (a.c.output_format() == Format::Json) out << j.dump(2) << '\n';
    else out << count << " towers written to " << a.c.out_path << '\n';
}

struct VerifyArgs {
    Common c;
    IdentityOptions opt;
    int order = 200;
};

int run_verify(VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.order < 1) throw InputError("--order must be positive");
    a.opt.series_order = static_cast<std::size_t>(a.order);
    a.opt.threads = thread_count();
    const IdentityReport report = verify_identities(a.opt);
    Sink sink(a.c.out_path, out);
    if (a.c.output_format() == Format::Json) {
        write_json(sink, report.to_json());
    } else {
        for (const auto& c : report.checks)
            *sink << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    }
    sink.close();
    if (const auto* f = report.first_failure()) {
        err << "towers: identity check failed: " << f->name << "\n  " << f->counterexample.dump() << '\n';
        return kExitInconsistent;
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration of towers built from 1 x i pieces", "towers"};
    app.require_subcommand(1);

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "brute-force counts of canonical towers");
    add_common(enumerate, en.c);
    auto* en_pieces = enumerate->add_option("--pieces", en.pieces, "bound on the number of pieces");
    auto* en_area = enumerate->add_option("--area", en.area, "bound on the total area");
    en_pieces->excludes(en_area);
    enumerate->add_flag("--weighted", en.weighted, "emit weight polynomials (needs --area)");
    enumerate->add_flag("--list", en.list, "emit the towers themselves");

    SeriesArgs se;
    auto* series = app.add_subcommand("series", "generating-function coefficients");
    add_common(series, se.c);
    series->add_option("--order", se.order, "truncation order (pieces with --by-pieces)")->capture_default_str();
    auto* se_weighted = series->add_flag("--weighted", se.weighted, "keep piece markers z_i");
    auto* se_pieces = series->add_flag("--by-pieces", se.by_pieces, "index by piece count");
    se_weighted->excludes(se_pieces);
    series->add_flag("--as-sequence", se.as_sequence, "emit coefficients 1..order as a sequence");
    series->add_option("--markers", se.markers, "per-size|shared (weighted only)")->capture_default_str();

    EliminateArgs el;
    auto* eliminate = app.add_subcommand("eliminate", "annihilating polynomial of H, P or M");
    add_common(eliminate, el.c);
    eliminate->add_option("--verify-order", el.verify_order, "series order used for verification")
        ->capture_default_str();
    eliminate->add_option("--max-degree", el.max_degree, "cap on the resultant y-degree")->capture_default_str();

    GuessArgs gu;
    auto* guess = app.add_subcommand("guess", "guess a linear recurrence with polynomial coefficients");
    add_common(guess, gu.c, false);
    guess->add_option("--seq", gu.seq_path, "sequence JSON")->required();
    guess->add_option("--max-order", gu.max_order, "largest order r");
    guess->add_option("--max-degree", gu.max_degree, "largest coefficient degree d");
    guess->add_option("--guard", gu.guard, "held-out windows")->capture_default_str();
    guess->add_option("--use", gu.use, "guess from the first N terms only and verify on the rest");
    guess->add_option("--max-total", gu.max_total, "bound on r + d for the automatic search")->capture_default_str();

    ExtendArgs ex;
    auto* extend = app.add_subcommand("extend", "unroll a recurrence to many terms");
    add_common(extend, ex.c, false);
    extend->add_option("--rec", ex.rec_path, "recurrence JSON")->required();
    extend->add_option("--init", ex.init_path, "initial terms (sequence JSON)")->required();
    extend->add_option("--terms", ex.terms, "total number of terms")->required();

    AsymptArgs as;
    auto* asympt = app.add_subcommand("asympt", "empirical asymptotics a(n) ~ C mu^n n^theta");
    add_common(asympt, as.c, false);
    asympt->add_option("--seq", as.seq_path, "sequence JSON")->required();
    asympt->add_option("--depth", as.depth, "Richardson depth")->capture_default_str();

    RenderArgs re;
    auto* render = app.add_subcommand("render", "SVG gallery of all towers with n pieces");
    add_common(render, re.c);
    render->add_option("--pieces", re.pieces, "number of pieces")->required();

    VerifyArgs ve;
    auto* verify = app.add_subcommand("verify", "run the identity suite");
    add_common(verify, ve.c, false);
    verify->add_option("--max-area", ve.opt.max_area, "brute-force area bound")->capture_default_str();
    verify->add_option("--max-pieces", ve.opt.max_pieces, "brute-force piece bound")->capture_default_str();
    verify->add_option("--order", ve.order, "series order")->capture_default_str();
    verify->add_flag("--corrupt-series", ve.opt.corrupt_series, "negative control: perturb one coefficient")
        ->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "towers: " << e.what() << '\n';
        return kExitArgument;
    }

    try {
        if (*enumerate) run_enumerate(en, out);
        else if (*series) run_series(se, out);
        else if (*eliminate) run_eliminate(el, out);
        else if (*guess) return run_guess(gu, out, err);
        else if (*extend) run_extend(ex, out);
        else if (*asympt) run_asympt(as, out);
        else if (*render) run_render(re, out);
        else if (*verify) return run_verify(ve, out, err);
        return kExitOk;
    } catch (const SingularityError& e) {
        err << "towers: " << e.what() << '\n';
        return kExitSingular;
    } catch (const std::invalid_argument& e) {  // InputError, UnsupportedConfiguration
        err << "towers: " << e.what() << '\n';
        return kExitArgument;
    } catch (const std::exception& e) {
        err << "towers: " << e.what() << '\n';
        return kExitInconsistent;
    }
}

}  // namespace towers
