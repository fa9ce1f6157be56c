#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hoqmc/error.hpp"
#include "hoqmc/format.hpp"
#include "hoqmc/interlace.hpp"
#include "hoqmc/io.hpp"
#include "hoqmc/netgen.hpp"
#include "hoqmc/qmc.hpp"
#include "hoqmc/quality.hpp"
#include "hoqmc/walsh.hpp"
#include "hoqmc/wce.hpp"

namespace hoqmc::cli {

namespace {

struct NetSource {
  std::string in;
  std::string family;
  std::uint32_t q = 2;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t s = 1;
};

void add_net_options(CLI::App* sub, NetSource& src) {
  sub->add_option("--in", src.in, "Matrix file to read instead of a built-in family");
  sub->add_option("--family", src.family, "Built-in family: identity, faure or sobol");
  sub->add_option("--q", src.q, "Prime base");
  sub->add_option("--m", src.m, "Matrix columns (q^m points)");
  sub->add_option("--n", src.n, "Matrix rows (default m)");
  sub->add_option("--s", src.s, "Number of coordinates");
}

DigitalNet load_net(const NetSource& src) {
  if (!src.in.empty()) {
    if (!src.family.empty())
      throw std::invalid_argument("give either --in or --family, not both");
    std::ifstream f(src.in);
    if (!f) throw std::invalid_argument("cannot open matrix file '" + src.in + "'");
    return read_matrix_file(f);
  }
  if (src.family.empty()) throw std::invalid_argument("one of --in or --family is required");
  if (src.m == 0) throw std::invalid_argument("--m must be >= 1");
  if (src.family == "faure" && src.s > src.q)
    throw std::invalid_argument("faure needs s <= q (s=" + std::to_string(src.s) + ", q=" +
                                std::to_string(src.q) + "); try --q " +
                                std::to_string(next_prime(static_cast<std::uint32_t>(src.s))));
  return family_net(src.family, src.q, src.m, src.n, src.s);
}

ParamList net_params(const NetSource& src, const DigitalNet& net) {
  ParamList p;
  if (!src.in.empty())
    p.emplace_back("in", src.in);
  else
    p.emplace_back("family", src.family);
  p.emplace_back("q", std::to_string(net.base()));
  p.emplace_back("n", std::to_string(net.n()));
  p.emplace_back("m", std::to_string(net.m()));
  p.emplace_back("s", std::to_string(net.s()));
  return p;
}

void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text[0] == '-')
    throw std::invalid_argument(what + ": '" + text + "' is not a non-negative integer");
  return v;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t no = 0;
  while (std::getline(f, line)) {
    ++no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(no) + " is not key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

int gen_points(const NetSource& src, const std::string& out_path, std::ostream& out) {
  const DigitalNet net = load_net(src);
  if (net.num_points() > kPointCap)
    throw CapExceeded("q^m = " + std::to_string(net.num_points()) +
                      " points exceed the cap 2^22; lower --m");
  ParamList p{{"command", "gen-points"}};
  const auto np = net_params(src, net);
  p.insert(p.end(), np.begin(), np.end());
  std::ostringstream os;
  os << comment_header(p);
  write_points_csv(os, net);
  emit(out_path, out, os.str());
  return kSuccess;
}

int interlace(const NetSource& src, std::size_t d, const std::string& out_path,
              std::ostream& out) {
  const InterlaceSpec spec(load_net(src), d);
  std::ostringstream os;
  write_matrix_file(os, spec.apply());
  emit(out_path, out, os.str());
  return kSuccess;
}

int certify(const NetSource& src, unsigned alpha, const std::string& beta_text,
            const std::string& mode, std::size_t n_t, const std::string& out_path,
            std::ostream& out) {
  const DigitalNet net = load_net(src);
  const QualityMethod method = parse_quality_method(mode);
  const Rational beta = beta_text.empty() ? min(Rational::integer(1), max_beta(net, alpha))
                                          : Rational::parse(beta_text);
  if (n_t == 0) n_t = net.n();
  const QualityReport rep = certify(net, alpha, beta, method, n_t);
  ParamList p{{"command", "certify"}};
  const auto np = net_params(src, net);
  p.insert(p.end(), np.begin(), np.end());
  p.emplace_back("alpha", std::to_string(alpha));
  p.emplace_back("beta", beta.to_string());
  p.emplace_back("mode", mode);
  p.emplace_back("nt", std::to_string(n_t));
  emit(out_path, out, comment_header(p) + rep.serialize() + "\n");
  return kSuccess;
}

struct WceArgs {
  double theta = 2.0;
  std::string gammas;
  std::size_t n_t = 0;
  std::optional<unsigned> t;
  std::string beta;
};

int wce(const NetSource& src, const WceArgs& a, const std::string& out_path, std::ostream& out) {
  const DigitalNet net = load_net(src);
  const auto sp = SmoothnessParam::from_theta(a.theta);
  std::vector<double> g;
  if (a.gammas.empty()) {
    g.assign(net.s(), 1.0);
  } else {
    for (const auto& tok : split(a.gammas, ',')) {
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != tok.size())
        throw std::invalid_argument("--gamma: '" + tok + "' is not a number");
      g.push_back(v);
    }
    if (g.size() == 1) g.assign(net.s(), g.front());
  }
  const WeightModel w(g);
  std::optional<NetCertification> cert;
  if (a.t.has_value() != !a.beta.empty())
    throw std::invalid_argument("--t and --beta must be given together");
  if (a.t) cert = NetCertification{*a.t, Rational::parse(a.beta)};
  const std::size_t n_t = a.n_t == 0 ? net.n() : a.n_t;
  const ErrorReport rep = worst_case_error(net, sp, w, n_t, cert);

  ParamList p{{"command", "wce"}};
  const auto np = net_params(src, net);
  p.insert(p.end(), np.begin(), np.end());
  p.emplace_back("theta", format_double(a.theta));
  std::string gs;
  for (double v : g) gs += (gs.empty() ? "" : ",") + format_double(v);
  p.emplace_back("gamma", gs);
  p.emplace_back("nt", std::to_string(n_t));
  p.emplace_back("certification", cert ? "given" : "strict");
  emit(out_path, out,
       comment_header(p) + ErrorReport::csv_header() + "\n" + rep.csv_row() + "\n");
  return kSuccess;
}

struct ConvergeArgs {
  std::string function = "exp";
  std::string family = "sobol";
  std::uint32_t q = 2;
  std::string d = "1";
  std::size_t s = 1;
  std::size_t m_min = 4;
  std::size_t m_max = 12;
  std::size_t shifts = 0;
  std::uint64_t seed = 1;
  std::string out_prefix;
  std::string config;
};

int converge(ConvergeArgs a, const std::function<bool(const std::string&)>& given,
             std::ostream& out) {
  if (!a.config.empty()) {
    for (const auto& [key, value] : read_config(a.config)) {
      if (key == "function") {
        if (!given("--function")) a.function = value;
      } else if (key == "family") {
        if (!given("--family")) a.family = value;
      } else if (key == "q") {
        if (!given("--q")) a.q = static_cast<std::uint32_t>(parse_u64(value, "q"));
      } else if (key == "d") {
        if (!given("--d")) a.d = value;
      } else if (key == "s") {
        if (!given("--s")) a.s = parse_u64(value, "s");
      } else if (key == "m_min") {
        if (!given("--m-min")) a.m_min = parse_u64(value, "m_min");
      } else if (key == "m_max") {
        if (!given("--m-max")) a.m_max = parse_u64(value, "m_max");
      } else if (key == "shifts") {
        if (!given("--shifts")) a.shifts = parse_u64(value, "shifts");
      } else if (key == "seed") {
        if (!given("--seed")) a.seed = parse_u64(value, "seed");
      } else if (key == "out_prefix") {
        if (!given("--out-prefix")) a.out_prefix = value;
      } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    }
  }
  std::vector<std::size_t> ds;
  for (const auto& tok : split(a.d, ',')) {
    const auto d = parse_u64(tok, "--d");
    if (d == 0) throw std::invalid_argument("--d values must be >= 1");
    ds.push_back(d);
  }
  if (ds.empty()) throw std::invalid_argument("--d needs at least one value");
  const TestFunction f = builtin_test_function(a.function, a.s);
  // Validate the family once before any output is produced.
  (void)family_sequence(a.family, a.q, a.s * *std::max_element(ds.begin(), ds.end()));

  bool first = true;
  for (std::size_t d : ds) {
    const auto seq = family_sequence(a.family, a.q, a.s * d);
    const NetFamily fam = [&seq, d](std::size_t m) {
      return interleave_matrices(sequence_prefix(seq, m, m), d);
    };
    const ConvergenceTable table = convergence_study(f, fam, a.m_min, a.m_max, a.shifts, a.seed);
    ParamList p{{"command", "converge"},
                {"function", a.function},
                {"family", a.family},
                {"q", std::to_string(a.q)},
                {"d", std::to_string(d)},
                {"s", std::to_string(a.s)},
                {"m_min", std::to_string(a.m_min)},
                {"m_max", std::to_string(a.m_max)},
                {"shifts", std::to_string(a.shifts)},
                {"seed", std::to_string(a.seed)}};
    if (!a.config.empty()) p.emplace_back("config", a.config);
    p.emplace_back("exact_integral", format_double(f.exact_integral));
    p.emplace_back("fitted_slope", format_double(table.fitted_slope));
    const std::string text = comment_header(p) + table.to_csv();
    if (a.out_prefix.empty()) {
      out << (first ? "" : "\n") << text;
    } else {
      emit(a.out_prefix + "_d" + std::to_string(d) + ".csv", out, text);
    }
    first = false;
  }
  return kSuccess;
}

int walsh_coeff(const std::string& function, std::size_t s, std::uint32_t q,
                const std::string& ks, unsigned resolution, const std::string& out_path,
                std::ostream& out) {
  const TestFunction f = builtin_test_function(function, s);
  require_prime(q);
  std::vector<std::vector<std::uint64_t>> kvecs;
  unsigned top = 0;
  for (const auto& tok : split(ks, ',')) {
    std::vector<std::uint64_t> kv;
    for (const auto& part : split(tok, ':')) kv.push_back(parse_u64(part, "--k"));
    if (kv.size() != s)
      throw std::invalid_argument("--k entry '" + tok + "' has " + std::to_string(kv.size()) +
                                  " components, expected s=" + std::to_string(s) +
                                  " separated by ':'");
    for (auto k : kv) top = std::max(top, highest_position(k, q));
    kvecs.push_back(std::move(kv));
  }
  if (kvecs.empty()) throw std::invalid_argument("--k needs at least one wavenumber");
  if (resolution == 0) resolution = top + 1;
  ParamList p{{"command", "walsh-coeff"},
              {"function", function},
              {"s", std::to_string(s)},
              {"q", std::to_string(q)},
              {"resolution", std::to_string(resolution)}};
  std::ostringstream os;
  os << comment_header(p) << "k,real,imag\n";
  for (const auto& kv : kvecs) {
    const auto c = walsh_coefficient(f.evaluate, kv, q, resolution);
    std::string label;
    for (auto k : kv) label += (label.empty() ? "" : ":") + std::to_string(k);
    os << label << ',' << format_double(c.real() + 0.0) << ',' << format_double(c.imag() + 0.0)
       << '\n';
  }
  emit(out_path, out, os.str());
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher-order digital nets: construction, certification and error studies",
               "hoqmc"};
  app.require_subcommand(1, 1);

  NetSource src;
  std::string out_path;

  auto* gen = app.add_subcommand("gen-points", "Write the points of a digital net as CSV");
  add_net_options(gen, src);
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::size_t d = 1;
  auto* inter = app.add_subcommand("interlace", "Interleave generating matrices by factor d");
  add_net_options(inter, src);
  inter->add_option("--d", d, "Interlacing factor")->required();
  inter->add_option("--out", out_path, "Output matrix file (default stdout)");

  unsigned alpha = 1;
  std::string beta;
  std::string mode = "independence";
  std::size_t n_t = 0;
  auto* cert = app.add_subcommand("certify", "Find the strict t-value of a net");
  add_net_options(cert, src);
  cert->add_option("--alpha", alpha, "Smoothness order alpha >= 1");
  cert->add_option("--beta", beta, "Rational beta p/q (default min(1, alpha m / n))");
  cert->add_option("--mode", mode, "independence, dual or both");
  cert->add_option("--nt", n_t, "Digits per coordinate of the dual box (default n)");
  cert->add_option("--out", out_path, "Output file (default stdout)");

  WceArgs wa;
  unsigned wce_t = 0;
  auto* wcmd = app.add_subcommand("wce", "Worst-case error in the Walsh space");
  add_net_options(wcmd, src);
  wcmd->add_option("--theta", wa.theta, "Smoothness theta > 1")->required();
  wcmd->add_option("--gamma", wa.gammas, "Product weights, comma separated (default 1)");
  wcmd->add_option("--nt", wa.n_t, "Digits per coordinate of the dual box (default n)");
  auto* t_opt = wcmd->add_option("--t", wce_t, "Certified t (with --beta)");
  wcmd->add_option("--beta", wa.beta, "Certified beta (with --t)");
  wcmd->add_option("--out", out_path, "Output file (default stdout)");

  ConvergeArgs ca;
  auto* conv = app.add_subcommand(
      "converge",
      "QMC error against m for interleaved families; the fitted slope drops the two smallest m");
  conv->add_option("--function", ca.function, "half-minus-x, x-squared, exp or sin");
  conv->add_option("--family", ca.family, "Source family: identity, faure or sobol");
  conv->add_option("--q", ca.q, "Prime base");
  conv->add_option("--d", ca.d, "Comma-separated interlacing factors, one CSV each");
  conv->add_option("--s", ca.s, "Dimension of the integrand");
  conv->add_option("--m-min", ca.m_min, "Smallest m");
  conv->add_option("--m-max", ca.m_max, "Largest m");
  conv->add_option("--shifts", ca.shifts, "Random digital shifts per m (0 = unshifted)");
  conv->add_option("--seed", ca.seed, "Seed for the shifts");
  conv->add_option("--out-prefix", ca.out_prefix, "Write <prefix>_d<d>.csv instead of stdout");
  conv->add_option("--config", ca.config, "key=value file; flags take precedence");

  std::string function;
  std::size_t ws = 1;
  std::uint32_t wq = 2;
  std::string ks;
  unsigned resolution = 0;
  auto* walsh = app.add_subcommand("walsh-coeff", "Walsh coefficients of a built-in function");
  walsh->add_option("--function", function, "half-minus-x, x-squared, exp or sin")->required();
  walsh->add_option("--s", ws, "Dimension");
  walsh->add_option("--q", wq, "Prime base");
  walsh->add_option("--k", ks, "Wavenumbers, comma separated; components joined by ':'")
      ->required();
  walsh->add_option("--resolution", resolution, "Cell depth M (default highest digit + 1)");
  walsh->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*gen) return gen_points(src, out_path, out);
    if (*inter) return interlace(src, d, out_path, out);
    if (*cert) return certify(src, alpha, beta, mode, n_t, out_path, out);
    if (*wcmd) {
      if (t_opt->count() > 0) wa.t = wce_t;
      return wce(src, wa, out_path, out);
    }
    if (*conv)
      return converge(ca, [conv](const std::string& flag) { return conv->count(flag) > 0; }, out);
    if (*walsh) return walsh_coeff(function, ws, wq, ks, resolution, out_path, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace hoqmc::cli
