#include "heron/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "heron/angle.hpp"
#include "heron/enumeration.hpp"
#include "heron/error.hpp"
#include "heron/lambda_families.hpp"
#include "heron/parallelogram.hpp"
#include "heron/quadratic.hpp"
#include "heron/record.hpp"
#include "heron/triangle.hpp"

namespace heron::cli {

namespace {

struct UsageError {
  std::string message;
};

class Emitter {
 public:
  Emitter(std::ostream& out, bool tsv, bool approx) : out_(out), tsv_(tsv), approx_(approx) {}

  void emit(const Record& record) {
    Record shown = approx_ ? with_approx(record) : record;
    if (!tsv_) {
      out_ << shown.to_line() << '\n';
      return;
    }
    std::string header = shown.to_tsv_header();
    if (header != last_header_) {
      out_ << header << '\n';
      last_header_ = header;
    }
    out_ << shown.to_tsv_values() << '\n';
  }

 private:
  // Output rationals gain a lossy "<key>.approx" decimal companion.
  static Record with_approx(const Record& record) {
    static const std::vector<std::string> skip{"op", "status", "code", "detail", "kind", "scan", "family"};
    Record out;
    for (const auto& [key, value] : record.fields()) {
      out.add(key, value);
      if (key.rfind("in.", 0) == 0 || std::find(skip.begin(), skip.end(), key) != skip.end()) continue;
      try {
        out.add(key + ".approx", Rational::parse(value).to_decimal(12));
      } catch (const Error&) {
      }
    }
    return out;
  }

  std::ostream& out_;
  bool tsv_;
  bool approx_;
  std::string last_header_;
};

Rational parse_arg(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError{"argument " + name + ": " + e.what()};
  }
}

std::int64_t parse_bound(const std::string& name, const std::string& text, std::int64_t minimum) {
  Rational value = parse_arg(name, text);
  if (!value.is_integer() || !value.numerator().fits_slong_p() || value < Rational(minimum))
    throw UsageError{"argument " + name + " must be an integer >= " + std::to_string(minimum)};
  return value.numerator().get_si();
}

// A leaf command taking a fixed list of rational positionals.
struct RationalCommand {
  std::string op;
  std::vector<std::string> names;
  std::vector<std::string> values;
  std::function<void(const std::vector<Rational>&, Record&)> body;
  CLI::App* app = nullptr;
};

Record echo_inputs(const std::string& op, const std::vector<std::string>& names,
                   const std::vector<std::string>& values) {
  Record r;
  r.add("op", op);
  for (std::size_t i = 0; i < names.size() && i < values.size(); ++i) r.add("in." + names[i], values[i]);
  return r;
}

Record error_record(Record base, const Error& e) {
  base.add("status", "error").add("code", std::string(to_string(e.code()))).add("detail", e.what());
  return base;
}

enum class Family { one, two };

Family parse_family_flag(const std::string& text) {
  if (text == "I" || text == "1") return Family::one;
  if (text == "II" || text == "2") return Family::two;
  throw UsageError{"--family must be I or II, got '" + text + "'"};
}

void add_triangle_fields(Record& r, const HeronTriangle& t) {
  r.add("u1", t.u1()).add("u2", t.u2()).add("u3", t.u3()).add("A", t.area());
}

void add_shape_fields(Record& r, const RationalParallelogram& pg) {
  r.add("u1", pg.u1()).add("u2", pg.u2()).add("u3", pg.u3()).add("u4", pg.u4());
}

void add_solution_fields(Record& r, const LambdaSolution& sol) {
  r.add("family", std::string(to_string(sol.family)))
      .add("sigma", sol.sigma)
      .add("m", sol.m)
      .add("n", sol.n)
      .add("lambda", sol.lambda);
}

HeronParallelogram heron_pgram(const std::vector<Rational>& v) {
  return HeronParallelogram(RationalParallelogram(v[0], v[1], v[2], v[3]), v[4]);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact parametrizations of Heron angles, triangles and parallelograms", "heron"};
  app.fallthrough();
  app.require_subcommand(1);
  bool tsv = false;
  bool approx = false;
  app.add_flag("--tsv", tsv, "Tab-separated output with a header line");
  app.add_flag("--approx", approx, "Add lossy decimal companions to output rationals");

  std::vector<std::unique_ptr<RationalCommand>> commands;
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::string op,
                  std::vector<std::string> names, std::function<void(const std::vector<Rational>&, Record&)> body) {
    auto cmd = std::make_unique<RationalCommand>();
    cmd->op = std::move(op);
    cmd->names = std::move(names);
    cmd->values.resize(cmd->names.size());
    cmd->body = std::move(body);
    cmd->app = parent->add_subcommand(name, help);
    for (std::size_t i = 0; i < cmd->names.size(); ++i)
      cmd->app->add_option(cmd->names[i], cmd->values[i], "rational")->required();
    commands.push_back(std::move(cmd));
    return commands.back()->app;
  };

  CLI::App* angle = group("angle", "Heron angles by generator tan(alpha/2)");
  leaf(angle, "from-generator", "sin and cos from the generator", "angle.from-generator", {"m"},
       [](const auto& v, Record& r) {
         SinCos sc = sincos_from_generator(HeronAngle(v[0]));
         r.add("sin", sc.sin).add("cos", sc.cos);
       });
  leaf(angle, "from-sincos", "generator from sin and cos", "angle.from-sincos", {"sin", "cos"},
       [](const auto& v, Record& r) { r.add("m", generator_from_sincos({v[0], v[1]}).generator()); });

  CLI::App* quad = group("quad", "x^2 + 2axy + y^2 = z^2");
  leaf(quad, "param", "(x, y, z) from (lambda, sigma)", "quad.param", {"a", "lambda", "sigma"},
       [](const auto& v, Record& r) {
         QuadraticTriple t = parametrize(v[0], {v[1], v[2]});
         r.add("x", t.x()).add("y", t.y()).add("z", t.z());
       });
  leaf(quad, "recover", "(lambda, sigma) from (x, y, z)", "quad.recover", {"a", "x", "y", "z"},
       [](const auto& v, Record& r) {
         ParamPair pp = recover(QuadraticTriple(v[0], v[1], v[2], v[3]));
         r.add("lambda", pp.lambda).add("sigma", pp.sigma);
       });

  // lambda type1/type2 accept either SIGMA or --m M --n N (inverse).
  CLI::App* lambda = group("lambda", "Type I / Type II solutions of the lambda relation");
  struct LambdaLeaf {
    std::string sigma, m, n;
    CLI::App* app = nullptr;
  };
  std::array<LambdaLeaf, 2> lambda_leaves;
  for (int i = 0; i < 2; ++i) {
    auto& l = lambda_leaves[static_cast<std::size_t>(i)];
    l.app = lambda->add_subcommand(i == 0 ? "type1" : "type2",
                                   i == 0 ? "lambda = m/n, sigma in (0,1)" : "lambda = mn, sigma in (1/2,1)");
    auto* s = l.app->add_option("sigma", l.sigma, "family parameter");
    auto* m = l.app->add_option("--m", l.m, "inverse: m");
    auto* n = l.app->add_option("--n", l.n, "inverse: n");
    m->needs(n);
    n->needs(m);
    s->excludes(m);
    s->excludes(n);
  }

  CLI::App* triangle = group("triangle", "Heron triangles <-> (p, q, v)");
  leaf(triangle, "from-params", "sides and area from (p, q, v)", "triangle.from-params", {"p", "q", "v"},
       [](const auto& v, Record& r) { add_triangle_fields(r, triangle_from_params({v[0], v[1], v[2]})); });
  leaf(triangle, "recover", "(p, q, v) from sides and area", "triangle.recover", {"u1", "u2", "u3", "A"},
       [](const auto& v, Record& r) {
         HeronTriangle t(v[0], v[1], v[2], v[3]);
         TriangleParams tp = params_from_triangle(t);
         r.add("p", tp.p).add("q", tp.q).add("v", tp.v).add("r", angle_generators(t).r);
       });
  leaf(triangle, "area", "rational area by Heron's formula, if any", "triangle.area", {"u1", "u2", "u3"},
       [](const auto& v, Record& r) {
         auto area = area_heron(v[0], v[1], v[2]);
         r.add("heron", area ? "true" : "false").add("A", area ? area->to_string() : "none");
       });

  CLI::App* pgram = group("pgram", "Rational and Heron parallelograms");
  leaf(pgram, "from-params", "sides and diagonals from (m, n, u)", "pgram.from-params", {"m", "n", "u"},
       [](const auto& v, Record& r) { add_shape_fields(r, pgram_from_params({v[0], v[1], v[2]})); });
  leaf(pgram, "recover", "(m, n, u) from sides and diagonals", "pgram.recover", {"u1", "u2", "u3", "u4"},
       [](const auto& v, Record& r) {
         ParallelogramParams pp = params_from_pgram(RationalParallelogram(v[0], v[1], v[2], v[3]));
         r.add("m", pp.m).add("n", pp.n).add("u", pp.u);
       });
  leaf(pgram, "classify", "Type I / II / other", "pgram.classify", {"u1", "u2", "u3", "u4", "A"},
       [](const auto& v, Record& r) {
         PgramClassification c = classify(heron_pgram(v));
         r.add("family", std::string(to_string(c.family)))
             .add("sigma", c.sigma ? c.sigma->to_string() : "none")
             .add("lambda", c.lambda)
             .add("m", c.m)
             .add("n", c.n);
       });
  leaf(pgram, "median-triangle", "triangle (u1, u2, u3) and its median u4/2", "pgram.median-triangle",
       {"u1", "u2", "u3", "u4", "A"}, [](const auto& v, Record& r) {
         MedianTriangle mt = median_triangle(heron_pgram(v));
         add_triangle_fields(r, mt.triangle);
         r.add("median", mt.median);
       });
  std::string family_text, sigma_text, u_text;
  CLI::App* from_sigma = pgram->add_subcommand("from-sigma", "Heron parallelogram from a family parameter");
  from_sigma->add_option("--family", family_text, "I or II")->required();
  from_sigma->add_option("--sigma", sigma_text, "family parameter")->required();
  from_sigma->add_option("--u", u_text, "scale")->required();

  CLI::App* enumerate = group("enum", "Brute-force census of integer instances");
  std::string max_perimeter_text, max_side_text, tri_out, pg_out;
  CLI::App* enum_tri = enumerate->add_subcommand("triangles", "integer Heron triangles by perimeter");
  enum_tri->add_option("--max-perimeter", max_perimeter_text)->required();
  enum_tri->add_option("--out", tri_out, "write the report here; print only the summary");
  CLI::App* enum_pg = enumerate->add_subcommand("pgrams", "integer Heron parallelograms by side");
  enum_pg->add_option("--max-side", max_side_text)->required();
  enum_pg->add_option("--out", pg_out, "write the report here; print only the summary");

  std::string report_path, verify_perimeter, verify_side;
  CLI::App* verify = app.add_subcommand("verify", "Certify a report file or a fresh census");
  verify->add_option("--report", report_path, "report file written by enum --out");
  verify->add_option("--max-perimeter", verify_perimeter);
  verify->add_option("--max-side", verify_side);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "heron: " << e.what() << '\n';
    return exit_usage;
  }

  Emitter emitter(out, tsv, approx);
  Record base;
  try {
    for (const auto& cmd : commands) {
      if (!cmd->app->parsed()) continue;
      base = echo_inputs(cmd->op, cmd->names, cmd->values);
      std::vector<Rational> values;
      for (std::size_t i = 0; i < cmd->names.size(); ++i) values.push_back(parse_arg(cmd->names[i], cmd->values[i]));
      Record result = base;
      result.add("status", "ok");
      cmd->body(values, result);
      emitter.emit(result);
      return exit_ok;
    }

    for (int i = 0; i < 2; ++i) {
      const auto& l = lambda_leaves[static_cast<std::size_t>(i)];
      if (!l.app->parsed()) continue;
      const bool type1 = i == 0;
      const std::string op = type1 ? "lambda.type1" : "lambda.type2";
      if (!l.m.empty()) {
        base = echo_inputs(op, {"m", "n"}, {l.m, l.n});
        Rational m = parse_arg("m", l.m), n = parse_arg("n", l.n);
        Record result = base;
        result.add("status", "ok").add("sigma", type1 ? sigma_from_type1(m, n) : sigma_from_type2(m, n));
        emitter.emit(result);
        return exit_ok;
      }
      if (l.sigma.empty()) throw UsageError{op + " needs SIGMA or --m/--n"};
      base = echo_inputs(op, {"sigma"}, {l.sigma});
      Rational sigma = parse_arg("sigma", l.sigma);
      Record result = base;
      result.add("status", "ok");
      add_solution_fields(result, type1 ? type1_from_sigma(sigma) : type2_from_sigma(sigma));
      emitter.emit(result);
      return exit_ok;
    }

    if (from_sigma->parsed()) {
      base = echo_inputs("pgram.from-sigma", {"family", "sigma", "u"}, {family_text, sigma_text, u_text});
      Family family = parse_family_flag(family_text);
      Rational sigma = parse_arg("sigma", sigma_text), u = parse_arg("u", u_text);
      LambdaFamily lf = family == Family::one ? LambdaFamily::type_i : LambdaFamily::type_ii;
      HeronParallelogram hp = heron_pgram_from_sigma(lf, sigma, u);
      LambdaSolution sol = lf == LambdaFamily::type_i ? type1_from_sigma(sigma) : type2_from_sigma(sigma);
      Record result = base;
      result.add("status", "ok");
      add_shape_fields(result, hp.shape());
      result.add("A", hp.area()).add("m", sol.m).add("n", sol.n).add("lambda", sol.lambda);
      emitter.emit(result);
      return exit_ok;
    }

    if (enum_tri->parsed() || enum_pg->parsed()) {
      const bool triangles = enum_tri->parsed();
      base = triangles ? echo_inputs("enum.triangles", {"max-perimeter"}, {max_perimeter_text})
                       : echo_inputs("enum.pgrams", {"max-side"}, {max_side_text});
      EnumerationReport report = triangles ? enumerate_heron_triangles(parse_bound("max-perimeter", max_perimeter_text, 1))
                                           : enumerate_heron_pgrams(parse_bound("max-side", max_side_text, 1));
      const std::string& path = triangles ? tri_out : pg_out;
      if (!path.empty()) {
        std::ofstream file(path);
        if (!file) throw UsageError{"cannot open '" + path + "' for writing"};
        write_report(file, report);
      } else {
        for (const auto& rec : report.triangles) emitter.emit(to_record(rec));
        for (const auto& rec : report.pgrams) emitter.emit(to_record(rec));
        for (const auto& a : report.anomalies) emitter.emit(Record().add("kind", "anomaly").add("detail", a));
      }
      emitter.emit(summary_record(report));
      return exit_ok;
    }

    if (verify->parsed()) {
      if (report_path.empty() && verify_perimeter.empty() && verify_side.empty())
        throw UsageError{"verify needs --report, --max-perimeter or --max-side"};
      std::vector<std::pair<std::string, EnumerationReport>> reports;
      if (!report_path.empty()) {
        std::ifstream file(report_path);
        if (!file) throw UsageError{"cannot open '" + report_path + "'"};
        base = echo_inputs("verify", {"report"}, {report_path});
        reports.emplace_back(report_path, read_report(file));
      }
      if (!verify_perimeter.empty())
        reports.emplace_back("", enumerate_heron_triangles(parse_bound("max-perimeter", verify_perimeter, 1)));
      if (!verify_side.empty())
        reports.emplace_back("", enumerate_heron_pgrams(parse_bound("max-side", verify_side, 1)));
      bool all_ok = true;
      for (const auto& [source, report] : reports) {
        CorpusVerdict verdict = verify_corpus(report);
        all_ok = all_ok && verdict.ok;
        for (const auto& a : verdict.anomalies)
          emitter.emit(Record().add("op", "verify").add("kind", "anomaly").add("detail", a));
        Record r;
        r.add("op", "verify");
        if (!source.empty()) r.add("in.report", source);
        r.add("status", verdict.ok ? "ok" : "error");
        if (!verdict.ok) r.add("code", "anomalies");
        r.add("scan", report.kind == ScanKind::triangles ? "triangles" : "pgrams")
            .add("bound", std::to_string(report.bound))
            .add("count", std::to_string(report.count()))
            .add("anomalies", std::to_string(verdict.anomalies.size()));
        emitter.emit(r);
      }
      return all_ok ? exit_ok : exit_domain;
    }
  } catch (const UsageError& e) {
    err << "heron: " << e.message << '\n';
    return exit_usage;
  } catch (const Error& e) {
    emitter.emit(error_record(base, e));
    err << "heron: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_domain;
  }
  err << "heron: no command\n";
  return exit_usage;
}

}  // namespace heron::cli
