#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "verify.hpp"

using namespace seshadri;

namespace {

struct JobSpec {
  std::string type;
  int rank = 0;
  std::string lambda;
  std::string tau = "w0";
  std::string qset = "auto";
  std::int64_t m = 1;
  std::string format = "json";
  std::uint64_t seed = 20240517;
  std::string out;
  std::string in;
  std::string element;
  std::string word;
  std::string model = "demazure";
  bool extended = false;
};

CartanData parse_cartan(const JobSpec& job) {
  if (job.type.empty()) throw ValidationError("--type is required");
  std::string name = job.type;
  const bool has_rank = name.find_first_of("0123456789") != std::string::npos;
  if (!has_rank) {
    if (job.rank < 1) throw ValidationError("--rank is required when --type has no rank");
    name += std::to_string(job.rank);
  }
  CartanData cd = CartanData::named(name);
  if (job.rank != 0 && job.rank != cd.rank()) throw ValidationError("--rank does not match --type");
  return cd;
}

Weight parse_lambda(const CartanData& cd, const std::string& text) {
  if (text.empty()) throw ValidationError("--lambda is required");
  std::vector<std::int64_t> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ValidationError("bad lambda coordinate '" + item + "'");
    }
  }
  if (static_cast<int>(coords.size()) != cd.rank())
    throw ValidationError("lambda needs " + std::to_string(cd.rank()) + " coordinates");
  Weight w(cd.rank());
  for (int k = 0; k < cd.rank(); ++k) w(k) = coords[static_cast<std::size_t>(k)];
  return w;
}

std::optional<QSet> parse_qset(const std::string& text) {
  if (text == "auto") return std::nullopt;
  QSet q;
  if (text.empty() || text == "none") return q;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      q.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw ValidationError("bad qset entry '" + item + "'");
    }
  }
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return q;
}

StratPoset build_poset(const JobSpec& job) {
  CartanData cd = parse_cartan(job);
  Weight lambda = parse_lambda(cd, job.lambda);
  return StratPoset::build(cd, lambda, job.tau, parse_qset(job.qset), job.extended);
}

void require_format(const JobSpec& job, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (job.format == f) return;
  throw ValidationError("format '" + job.format + "' is not available for this command");
}

void require_m(const JobSpec& job) {
  if (job.m < 1) throw ValidationError("--m must be a positive integer");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_poset(const JobSpec& job) {
  require_format(job, {"json", "dot"});
  auto emit = [&](const StratPoset& p) { return job.format == "dot" ? to_dot(p) : dump(to_json(p)); };
  if (!job.in.empty()) {
    std::ifstream file(job.in);
    if (!file) throw ValidationError("cannot read " + job.in);
    Json j;
    try {
      j = Json::parse(file);
    } catch (const Json::exception& e) {
      throw ValidationError(std::string("bad json: ") + e.what());
    }
    return emit(poset_from_json(j));
  }
  return emit(build_poset(job));
}

std::string cmd_chains(const JobSpec& job) {
  require_format(job, {"json", "csv"});
  StratPoset p = build_poset(job);
  auto chains = maximal_chains(p);
  if (job.format == "csv") {
    std::ostringstream os;
    os << "chain,bonds,bond_product\n";
    for (const auto& c : chains) {
      for (std::size_t k = 0; k < c.elems.size(); ++k) os << (k ? " > " : "") << p.label(c.elems[k]);
      os << ",";
      for (std::size_t k = 0; k < c.bonds.size(); ++k) os << (k ? " " : "") << c.bonds[k];
      os << "," << bond_product(c) << "\n";
    }
    return os.str();
  }
  Json out = Json::array();
  for (const auto& c : chains) out.push_back(to_json(c, p));
  return dump(out);
}

std::string cmd_ls_enum(const JobSpec& job) {
  require_format(job, {"json", "csv"});
  require_m(job);
  StratPoset p = build_poset(job);
  auto elements = enumerate_fan(p, job.m);
  if (job.format == "csv") return fan_to_csv(p, elements);
  Json out = Json::array();
  for (const auto& a : elements) {
    Json entry = to_json(p, a);
    entry["path"] = to_json(p, theta_inv(p, a, job.m));
    entry["weight"] = Json::array();
    Weight w = integral_weight_of(p, a);
    for (Eigen::Index k = 0; k < w.size(); ++k) entry["weight"].push_back(w(k));
    out.push_back(entry);
  }
  return dump(out);
}

std::string cmd_character(const JobSpec& job) {
  require_format(job, {"json", "csv"});
  if (job.m < 0) throw ValidationError("--m must be nonnegative");
  StratPoset p = build_poset(job);
  Character chi;
  if (job.model == "demazure") {
    chi = demazure_character(p, job.m);
  } else if (job.model == "paths") {
    chi = path_character(p, job.m);
  } else {
    throw ValidationError("--model must be demazure or paths");
  }
  return job.format == "csv" ? character_to_csv(chi) : dump(to_json(chi));
}

std::string cmd_dim(const JobSpec& job) {
  require_format(job, {"json"});
  if (job.m < 0) throw ValidationError("--m must be nonnegative");
  return dump(Json{{"dim", integer_to_json(dimension(build_poset(job), job.m))}});
}

std::string cmd_degree(const JobSpec& job) {
  require_format(job, {"json"});
  return dump(Json{{"degree", integer_to_json(degree(build_poset(job)))}});
}

std::string cmd_nok(const JobSpec& job) {
  require_format(job, {"json"});
  StratPoset p = build_poset(job);
  std::vector<std::int64_t> ms;
  for (std::int64_t m = 0; m <= std::max<std::int64_t>(job.m, p.tau().length() + 1); ++m) ms.push_back(m);
  Json out = nok_to_json(p, ms);
  out["degree_via_hilbert"] = integer_to_json(degree_via_hilbert(p, ms));
  return dump(out);
}

std::string cmd_decompose(const JobSpec& job) {
  require_format(job, {"json"});
  StratPoset p = build_poset(job);
  FanElement a = parse_fan_element(p, job.element);
  auto parts = standard_decompose(p, a);
  Json summands = Json::array();
  for (const auto& part : parts) summands.push_back(to_json(p, part));
  return dump(Json{{"element", to_json(p, a)}, {"summands", summands}});
}

std::string cmd_monomial(const JobSpec& job) {
  require_format(job, {"json"});
  StratPoset p = build_poset(job);
  FanElement a = parse_fan_element(p, job.element);
  if (a.empty()) throw ValidationError("--element must be nonzero");
  Word word = job.word.empty() ? p.vertex(a.top()).word() : parse_word(job.word);
  DividedPowerMonomial mono = v_monomial(p, a, word);
  Json out = to_json(mono);
  out["weight"] = Json::array();
  Weight w = monomial_weight(p.cartan(), p.lambda(), mono);
  for (Eigen::Index k = 0; k < w.size(); ++k) out["weight"].push_back(w(k));
  return dump(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seshadri stratifications of Schubert varieties: posets, LS fans, characters, degrees"};
  app.require_subcommand(1);
  JobSpec job;

  auto add_common = [&](CLI::App* sub, bool needs_poset) {
    if (needs_poset) {
      sub->add_option("--type", job.type, "Cartan type, e.g. A2, B3, G2 (or a letter with --rank)");
      sub->add_option("--rank", job.rank, "Rank when --type is a bare letter");
      sub->add_option("--lambda", job.lambda, "Dominant weight in fundamental coordinates, e.g. 1,1");
      sub->add_option("--tau", job.tau, "Coset word such as 2.1, or w0")->capture_default_str();
      sub->add_option("--qset", job.qset, "auto, none, or comma-separated indices")->capture_default_str();
      sub->add_flag("--extended", job.extended, "Add the extra bottom element");
    }
    sub->add_option("--format", job.format, "json, dot or csv")->capture_default_str();
    sub->add_option("--out", job.out, "Write to FILE instead of standard output");
  };

  std::vector<std::pair<CLI::App*, std::string (*)(const JobSpec&)>> commands;
  auto add = [&](const char* name, const char* help, std::string (*fn)(const JobSpec&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, true);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* poset = add("poset", "Bonded Hasse diagram of A_tau", cmd_poset);
  poset->add_option("--in", job.in, "Re-ingest a poset JSON file");
  add("chains", "Maximal chains with bonds", cmd_chains);
  add("ls-enum", "Enumerate LS_lambda^+(m)", cmd_ls_enum)->add_option("--m", job.m)->capture_default_str();
  auto* character = add("character", "Demazure character of V(m lambda)_tau", cmd_character);
  character->add_option("--m", job.m)->capture_default_str();
  character->add_option("--model", job.model, "demazure or paths")->capture_default_str();
  add("dim", "dim V(m lambda)_tau", cmd_dim)->add_option("--m", job.m)->capture_default_str();
  add("degree", "Degree of the embedded Schubert variety", cmd_degree);
  add("nok", "Newton-Okounkov complex data", cmd_nok)->add_option("--m", job.m, "Largest Hilbert sample");
  add("decompose", "Standard decomposition of a fan element", cmd_decompose)
      ->add_option("--element", job.element, "e.g. 2.1:1,1:1")
      ->required();
  auto* monomial = add("monomial", "Divided-power monomial of a fan element", cmd_monomial);
  monomial->add_option("--element", job.element, "e.g. 1:1/2,id:1/2")->required();
  monomial->add_option("--word", job.word, "Reduced word of the top support vertex");

  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite on the built-in case matrix");
  add_common(verify, false);
  verify->add_option("--seed", job.seed)->capture_default_str();
  bool verbose = false;
  verify->add_flag("--verbose", verbose, "Log progress to standard error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    std::string text;
    int code = 0;
    if (verify->parsed()) {
      require_format(job, {"json"});
      auto report = cli::run_verify(job.seed, verbose ? &std::cerr : nullptr);
      text = dump(cli::to_json(report));
      for (const auto& f : report.failures) std::cerr << "FAIL " << f << "\n";
      code = report.failures.empty() ? 0 : 2;
    } else {
      for (auto& [sub, fn] : commands)
        if (sub->parsed()) text = fn(job);
    }
    if (job.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(job.out);
      if (!file) throw ValidationError("cannot write " + job.out);
      file << text;
    }
    return code;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
