#include "dhcount/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include "dhcount/errors.hpp"

namespace dhcount::cli {

namespace {

const std::vector<std::string> kCommands{"count", "verify", "sweep", "gsum-table",
                                         "gamma-table", "wset", "gfun"};
const std::map<std::string, std::string> kDescriptions{
    {"count", "count points with the chosen engines"},
    {"verify", "run every engine against brute force for each lambda"},
    {"sweep", "verify over several fields, in parallel"},
    {"gsum-table", "Gauss sums g(T^j) for j in [0, q-2]"},
    {"gamma-table", "residues of Gamma_p(k/den) modulo p^N"},
    {"wset", "weight vectors, classes and representatives"},
    {"gfun", "evaluate the p-adic hypergeometric function"},
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string join(const std::vector<std::string>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::uint32_t parse_uint(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(s, &pos);
    if (pos != s.size() || s.empty() || s[0] == '-' || v > 0xffffffffUL) throw std::exception();
    return static_cast<std::uint32_t>(v);
  } catch (...) {
    throw InvalidInput(std::string("bad ") + what + " '" + s + "'");
  }
}

std::vector<std::uint32_t> parse_uint_list(const std::string& s, const char* what) {
  std::vector<std::uint32_t> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_uint(tok, what));
  if (out.empty()) throw InvalidInput(std::string("empty ") + what);
  return out;
}

std::string uint_list(const std::vector<std::uint32_t>& xs) {
  std::vector<std::string> s;
  for (auto x : xs) s.push_back(std::to_string(x));
  return join(s, ',');
}

Rational parse_rational(const std::string& s) {
  const auto parts = split(s, '/');
  try {
    if (parts.size() == 1) return Rational(std::stoll(parts[0]));
    if (parts.size() == 2) {
      const long long den = std::stoll(parts[1]);
      if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
      return Rational(std::stoll(parts[0]), den);
    }
  } catch (const InvalidInput&) {
    throw;
  } catch (...) {
  }
  throw InvalidInput("bad rational '" + s + "'");
}

FieldCtx make_field(std::uint32_t p, std::uint32_t r) {
  if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw InvalidInput("r must be at least 1");
  return FieldCtx::make(p, r);
}

std::vector<std::uint32_t> effective_h(const RunConfig& cfg) {
  if (!cfg.h.empty()) {
    if (cfg.h.size() != cfg.n) {
      throw InvalidInput("h has " + std::to_string(cfg.h.size()) + " entries but n = " +
                         std::to_string(cfg.n));
    }
    return cfg.h;
  }
  return std::vector<std::uint32_t>(cfg.n, 1);
}

std::vector<Engine> selected_engines(const RunConfig& cfg, bool default_all) {
  std::vector<Engine> out;
  if (cfg.engines.empty()) {
    if (!default_all) return {Engine::kBrute};
    for (const auto& e : all_engines()) out.push_back(e.id);
    return out;
  }
  for (const auto& name : cfg.engines) out.push_back(engine_from_name(name));
  return out;
}

// ---------------------------------------------------------------- rows

enum class Status { kOk, kSkip, kMismatch, kPrecision, kError };

const char* status_name(Status s) {
  switch (s) {
    case Status::kOk: return "OK";
    case Status::kSkip: return "SKIP";
    case Status::kMismatch: return "MISMATCH";
    case Status::kPrecision: return "PRECISION";
    case Status::kError: return "ERROR";
  }
  return "?";
}

struct Row {
  std::uint32_t p = 0, r = 0, n = 0;
  std::string h, lambda, engine;
  std::optional<std::int64_t> count;
  double residual = 0.0;
  int precision = 0;
  double ms = 0.0;
  Status status = Status::kOk;
  std::string message;
};

int exit_for(Status s) {
  switch (s) {
    case Status::kMismatch: return kMismatch;
    case Status::kPrecision: return kPrecision;
    case Status::kError: return kPrecondition;
    default: return kOk;
  }
}

// Mismatch outranks precision failures, which outrank precondition errors.
int worse(int a, int b) {
  auto rank = [](int c) {
    switch (c) {
      case kMismatch: return 4;
      case kPrecision: return 3;
      case kPrecondition: return 2;
      case kInvalidInput: return 1;
      default: return 0;
    }
  };
  return rank(b) > rank(a) ? b : a;
}

class RowWriter {
 public:
  RowWriter(std::ostream& out, const RunConfig& cfg) : out_(out), cfg_(cfg) {}

  void write(const std::vector<Row>& rows) {
    if (cfg_.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json j;
        j["p"] = r.p;
        j["r"] = r.r;
        j["n"] = r.n;
        j["h"] = r.h;
        j["lambda"] = r.lambda;
        j["engine"] = r.engine;
        j["count"] = r.count ? nlohmann::json(*r.count) : nlohmann::json(nullptr);
        j["residual"] = r.residual;
        j["precision"] = r.precision;
        j["ms"] = cfg_.no_timing ? 0.0 : r.ms;
        j["status"] = status_name(r.status);
        if (!r.message.empty()) j["message"] = r.message;
        arr.push_back(std::move(j));
      }
      out_ << arr.dump(2) << "\n";
      return;
    }
    out_ << "p,r,n,h,lambda,engine,count,residual,precision,ms,status\n";
    for (const auto& r : rows) {
      out_ << r.p << ',' << r.r << ',' << r.n << ",\"" << r.h << "\"," << r.lambda << ','
           << r.engine << ',';
      if (r.count) out_ << *r.count;
      out_ << ',' << std::scientific << std::setprecision(3) << r.residual << std::defaultfloat
           << ',' << r.precision << ',' << std::fixed << std::setprecision(3)
           << (cfg_.no_timing ? 0.0 : r.ms) << std::defaultfloat << ',' << status_name(r.status)
           << '\n';
    }
  }

 private:
  std::ostream& out_;
  const RunConfig& cfg_;
};

Row run_one(Engine e, const EngineContext& ctx, const DeformParams& dp, bool debug) {
  Row row;
  row.p = dp.field.p();
  row.r = dp.field.r();
  row.n = dp.n;
  row.h = uint_list(dp.h);
  row.lambda = format_lambda(dp.field, dp.lambda);
  row.engine = std::string(engine_info(e).name);
  try {
    const CountReport rep = run_engine(e, ctx, dp);
    row.count = rep.count;
    row.residual = rep.residual;
    row.precision = rep.precision;
    row.ms = rep.ms;
  } catch (const PreconditionError& ex) {
    row.status = Status::kSkip;
    row.message = ex.what();
  } catch (const PrecisionError& ex) {
    row.status = Status::kPrecision;
    row.message = ex.what();
  }
  if (debug && engine_info(e).padic && row.status == Status::kOk && dp.field.p() != 2 &&
      !dp.p_divides_dh() && (e == Engine::kPadicMain || e == Engine::kPadicSwapped)) {
    const auto variant = e == Engine::kPadicMain ? MainVariant::kMain : MainVariant::kSwapped;
    row.message = main_padic_value(ctx.padic(dp.n), dp, variant).to_string();
  }
  return row;
}

// Marks rows that disagree with the oracle of their kind.
void check_against_oracle(std::vector<Row>& rows) {
  std::optional<std::int64_t> proj, star;
  for (const auto& r : rows) {
    if (r.engine == "brute") proj = r.count;
    if (r.engine == "brute-affine-star") star = r.count;
  }
  for (auto& r : rows) {
    if (r.status != Status::kOk || !r.count) continue;
    const bool is_star = engine_info(engine_from_name(r.engine)).affine_star;
    const auto& ref = is_star ? star : proj;
    if (ref && *ref != *r.count) {
      r.status = Status::kMismatch;
      r.message = "expected " + std::to_string(*ref);
    }
  }
}

// Engines always compared against, added when a verify run omits them.
std::vector<Engine> with_oracles(std::vector<Engine> es) {
  auto add_front = [&](Engine e) {
    if (std::find(es.begin(), es.end(), e) == es.end()) es.insert(es.begin(), e);
  };
  bool star = false;
  for (auto e : es) star = star || engine_info(e).affine_star;
  if (star) add_front(Engine::kBruteAffineStar);
  add_front(Engine::kBrute);
  return es;
}

template <class Task>
void parallel_for(std::size_t count, unsigned workers, Task&& task) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto body = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// ---------------------------------------------------------------- commands

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.p.size() != 1 || cfg.r.size() != 1) throw InvalidInput("count takes a single p and r");
  const FieldCtx field = make_field(cfg.p[0], cfg.r[0]);
  const EngineContext ctx(field, effective_prec_bits(cfg), cfg.padic_pad);
  const auto base = DeformParams::make(field, effective_h(cfg), field.zero());
  std::vector<Row> rows;
  int code = kOk;
  for (const auto lam : parse_lambda(field, cfg.lambda)) {
    const auto dp = base.with_lambda(lam);
    for (const auto e : selected_engines(cfg, false)) {
      rows.push_back(run_one(e, ctx, dp, cfg.debug));
      const auto& r = rows.back();
      if (r.status == Status::kSkip) code = worse(code, kPrecondition);
      code = worse(code, exit_for(r.status));
    }
  }
  RowWriter(out, cfg).write(rows);
  for (const auto& r : rows) {
    if (!r.message.empty()) err << r.engine << " at lambda=" << r.lambda << ": " << r.message << "\n";
  }
  return code;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.p.size() != 1 || cfg.r.size() != 1) throw InvalidInput("verify takes a single p and r");
  const FieldCtx field = make_field(cfg.p[0], cfg.r[0]);
  const EngineContext ctx(field, effective_prec_bits(cfg), cfg.padic_pad);
  const auto base = DeformParams::make(field, effective_h(cfg), field.zero());
  const auto engines = with_oracles(selected_engines(cfg, true));
  const auto lambdas = parse_lambda(field, cfg.lambda);

  std::vector<std::vector<Row>> table(lambdas.size());
  parallel_for(lambdas.size(), effective_workers(cfg), [&](std::size_t i) {
    const auto dp = base.with_lambda(lambdas[i]);
    for (const auto e : engines) table[i].push_back(run_one(e, ctx, dp, cfg.debug));
    check_against_oracle(table[i]);
  });

  if (cfg.format == "json") {
    std::vector<Row> flat;
    for (const auto& rs : table) flat.insert(flat.end(), rs.begin(), rs.end());
    RowWriter(out, cfg).write(flat);
  } else {
    out << std::left << std::setw(10) << "lambda";
    for (const auto e : engines) out << std::setw(18) << engine_info(e).name;
    out << "result\n";
  }
  int code = kOk;
  for (const auto& rs : table) {
    bool pass = true;
    for (const auto& r : rs) {
      code = worse(code, exit_for(r.status));
      if (r.status == Status::kMismatch || r.status == Status::kPrecision) {
        pass = false;
        err << "FAIL p=" << r.p << " r=" << r.r << " n=" << r.n << " h=(" << r.h
            << ") lambda=" << r.lambda << " engine=" << r.engine << " count="
            << (r.count ? std::to_string(*r.count) : "-") << ": " << r.message << "\n";
      }
    }
    if (cfg.format != "json") {
      out << std::setw(10) << rs.front().lambda;
      for (const auto& r : rs) {
        std::string cell = r.status == Status::kSkip ? "SKIP"
                           : r.count                 ? std::to_string(*r.count)
                                                     : status_name(r.status);
        if (r.status == Status::kMismatch) cell += "!";
        out << std::setw(18) << cell;
      }
      out << (pass ? "PASS" : "FAIL") << "\n";
    }
  }
  return code;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  struct Point {
    std::shared_ptr<const EngineContext> ctx;
    DeformParams dp;
  };
  std::vector<Point> points;
  const auto h = effective_h(cfg);
  for (auto p : cfg.p) {
    for (auto r : cfg.r) {
      const FieldCtx field = make_field(p, r);
      auto ctx = std::make_shared<const EngineContext>(field, effective_prec_bits(cfg), cfg.padic_pad);
      const auto base = DeformParams::make(field, h, field.zero());
      for (const auto lam : parse_lambda(field, cfg.lambda)) points.push_back({ctx, base.with_lambda(lam)});
    }
  }
  const auto engines = with_oracles(selected_engines(cfg, true));
  std::vector<std::vector<Row>> table(points.size());
  parallel_for(points.size(), effective_workers(cfg), [&](std::size_t i) {
    for (const auto e : engines) table[i].push_back(run_one(e, *points[i].ctx, points[i].dp, false));
    check_against_oracle(table[i]);
  });
  std::vector<Row> flat;
  int code = kOk;
  for (const auto& rs : table) {
    for (const auto& r : rs) code = worse(code, exit_for(r.status));
    flat.insert(flat.end(), rs.begin(), rs.end());
  }
  RowWriter(out, cfg).write(flat);
  return code;
}

int cmd_gsum_table(const RunConfig& cfg, std::ostream& out) {
  const FieldCtx field = make_field(cfg.p.at(0), cfg.r.at(0));
  const CharSums sums(field, effective_prec_bits(cfg));
  out << "j,re,im,abs2\n";
  for (std::uint32_t j = 0; j + 1 < field.q(); ++j) {
    const CycValue g = sums.gauss(j);
    out << j << ',' << g.re().to_string(25) << ',' << g.im().to_string(25) << ','
        << g.norm().to_string(25) << '\n';
  }
  return kOk;
}

int cmd_gamma_table(const RunConfig& cfg, std::ostream& out) {
  const FieldCtx field = make_field(cfg.p.at(0), cfg.r.at(0));
  const auto ctx = padic_context_for(field, cfg.n, cfg.padic_pad);
  const std::uint32_t den = cfg.den ? cfg.den : field.q() - 1;
  if (den % field.p() == 0) throw InvalidInput("denominator divisible by p");
  out << "# Gamma_p(k/" << den << ") mod " << field.p() << "^" << ctx->digits() << "\n";
  out << "k,residue\n";
  for (std::uint32_t k = 0; k < den; ++k) {
    out << k << ',' << ctx->gamma_residue(ctx->residue({k, den})) << '\n';
  }
  return kOk;
}

int cmd_wset(const RunConfig& cfg, std::ostream& out) {
  const FieldCtx field = make_field(cfg.p.at(0), cfg.r.at(0));
  const auto dp = DeformParams::make(field, effective_h(cfg), field.zero());
  const auto wset = build_w_set(dp.n, dp.t);
  const auto dec = partition_classes(wset, dp.h, dp.t);
  auto str = [](const WeightVector& w) {
    std::vector<std::string> s;
    for (auto x : w.w) s.push_back(std::to_string(x));
    return "(" + join(s, ',') + ")";
  };
  out << "# n=" << dp.n << " d=" << dp.d << " t=" << dp.t << " |W|=" << wset.size()
      << " classes=" << dec.classes.size() << "\n";
  for (const auto& c : dec.classes) {
    out << str(c.rep) << " zero_rep=" << (c.zero_rep ? str(*c.zero_rep) : "none") << " members=";
    std::vector<std::string> ms;
    for (const auto& m : c.members) ms.push_back(str(m));
    out << join(ms, ' ') << "\n";
  }
  return kOk;
}

int cmd_gfun(const RunConfig& cfg, std::ostream& out) {
  const FieldCtx field = make_field(cfg.p.at(0), cfg.r.at(0));
  const auto ctx = padic_context_for(field, cfg.n, cfg.padic_pad);
  GParams params;
  for (const auto& s : cfg.top) params.a.push_back(parse_rational(s));
  for (const auto& s : cfg.bottom) params.b.push_back(parse_rational(s));
  const auto lambdas = parse_lambda(field, cfg.lambda);
  for (const auto lam : lambdas) {
    params.lambda = lam;
    const QqNumber v = evaluate_g(*ctx, params);
    out << "lambda=" << format_lambda(field, lam) << " " << v.to_string() << "\n";
  }
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& p, std::string& r, std::string& h,
                std::string& engines) {
  sub->add_option("--p", p, "prime p (comma list for sweep)");
  sub->add_option("--r", r, "degree r, q = p^r (comma list for sweep)");
  sub->add_option("--n", cfg.n, "number of variables");
  sub->add_option("--h", h, "exponents h_1,...,h_n (default all 1)");
  sub->add_option("--lambda", cfg.lambda, "g^k, coefficient list c0,c1,..., or all");
  sub->add_option("--engine", engines, "comma list of engines (default: brute for count, all otherwise)");
  sub->add_option("--prec-bits", cfg.prec_bits, "complex precision in bits (>= 192)");
  sub->add_option("--padic-pad", cfg.padic_pad, "extra p-adic digits beyond the minimum");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", cfg.output, "write results to this file");
  sub->add_option("--workers", cfg.workers, "worker threads for verify/sweep");
  sub->add_flag("--debug", cfg.debug, "print p-adic internals");
  sub->add_flag("--no-timing", cfg.no_timing, "report ms as 0 for reproducible tables");
  sub->add_option("--top", cfg.top, "gfun top parameters, e.g. 1/3,2/3")->delimiter(',');
  sub->add_option("--bottom", cfg.bottom, "gfun bottom parameters")->delimiter(',');
  sub->add_option("--den", cfg.den, "gamma-table denominator (default q-1)");
}

}  // namespace

// ---------------------------------------------------------------- public

std::vector<FieldElement> parse_lambda(const FieldCtx& field, const std::string& spec) {
  if (spec == "all") return field.elements();
  if (spec.rfind("g^", 0) == 0) {
    const std::string k = spec.substr(2);
    bool neg = !k.empty() && k[0] == '-';
    const std::uint32_t e = parse_uint(neg ? k.substr(1) : k, "generator exponent");
    return {field.exp(neg ? -static_cast<std::int64_t>(e) : e)};
  }
  std::vector<std::uint32_t> c = parse_uint_list(spec, "lambda coefficient");
  if (c.size() > field.r()) throw InvalidInput("too many lambda coefficients");
  for (auto x : c) {
    if (x >= field.p()) throw InvalidInput("lambda coefficient out of range");
  }
  c.resize(field.r(), 0);
  return {field.from_coeffs(c)};
}

std::string format_lambda(const FieldCtx& field, FieldElement x) {
  if (x.is_zero()) return "0";
  return "g^" + std::to_string(field.dlog(x));
}

long effective_prec_bits(const RunConfig& cfg) {
  long bits = cfg.prec_bits;
  if (bits == 0) {
    if (const char* env = std::getenv("DHCOUNT_PREC_BITS")) bits = parse_uint(env, "DHCOUNT_PREC_BITS");
  }
  if (bits == 0) bits = CycValue::kMinPrecBits;
  if (bits < CycValue::kMinPrecBits) throw InvalidInput("precision must be at least 192 bits");
  return bits;
}

unsigned effective_workers(const RunConfig& cfg) {
  unsigned w = cfg.workers;
  if (w == 0) {
    if (const char* env = std::getenv("DHCOUNT_WORKERS")) w = parse_uint(env, "DHCOUNT_WORKERS");
  }
  if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
  return w;
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& help) {
  RunConfig cfg;
  std::string p = "7", r = "1", h, engines;
  CLI::App app{"Exact point counts for deformed diagonal hypersurfaces over finite fields"};
  app.set_help_flag("--help", "show help");
  app.require_subcommand(1);
  std::vector<CLI::App*> subs;
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->set_help_flag("--help", "show help");
    add_common(sub, cfg, p, r, h, engines);
    subs.push_back(sub);
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    help << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw InvalidInput(e.what());
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) cfg.command = kCommands[i];
  }
  cfg.p = parse_uint_list(p, "p");
  cfg.r = parse_uint_list(r, "r");
  if (!h.empty()) cfg.h = parse_uint_list(h, "h");
  if (!engines.empty()) cfg.engines = split(engines, ',');
  for (const auto& e : cfg.engines) engine_from_name(e);
  if (cfg.n < 2) throw InvalidInput("n must be at least 2");
  return cfg;
}

std::vector<std::string> to_args(const RunConfig& cfg) {
  std::vector<std::string> a{cfg.command};
  auto opt = [&](const char* name, const std::string& v) {
    a.push_back(name);
    a.push_back(v);
  };
  opt("--p", uint_list(cfg.p));
  opt("--r", uint_list(cfg.r));
  opt("--n", std::to_string(cfg.n));
  if (!cfg.h.empty()) opt("--h", uint_list(cfg.h));
  opt("--lambda", cfg.lambda);
  if (!cfg.engines.empty()) opt("--engine", join(cfg.engines, ','));
  if (cfg.prec_bits) opt("--prec-bits", std::to_string(cfg.prec_bits));
  opt("--padic-pad", std::to_string(cfg.padic_pad));
  opt("--format", cfg.format);
  if (!cfg.output.empty()) opt("--output", cfg.output);
  if (cfg.workers) opt("--workers", std::to_string(cfg.workers));
  if (cfg.debug) a.push_back("--debug");
  if (cfg.no_timing) a.push_back("--no-timing");
  if (!cfg.top.empty()) opt("--top", join(cfg.top, ','));
  if (!cfg.bottom.empty()) opt("--bottom", join(cfg.bottom, ','));
  if (cfg.den) opt("--den", std::to_string(cfg.den));
  return a;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw InvalidInput("cannot open output file '" + cfg.output + "'");
    sink = &file;
  }
  const std::string& c = cfg.command;
  if (c == "count") return cmd_count(cfg, *sink, err);
  if (c == "verify") return cmd_verify(cfg, *sink, err);
  if (c == "sweep") return cmd_sweep(cfg, *sink);
  if (c == "gsum-table") return cmd_gsum_table(cfg, *sink);
  if (c == "gamma-table") return cmd_gamma_table(cfg, *sink);
  if (c == "wset") return cmd_wset(cfg, *sink);
  if (c == "gfun") return cmd_gfun(cfg, *sink);
  throw InvalidInput("unknown command '" + c + "'");
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_args(args, out);
    if (!cfg) return kOk;
    return run(*cfg, out, err);
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const PrecisionError& e) {
    err << "precision: " << e.what() << "\n";
    return kPrecision;
  }
}

}  // namespace dhcount::cli
