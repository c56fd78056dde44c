#include "topolab/cli.hpp"

#include <zlib.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "topolab/enumerate.hpp"
#include "topolab/errors.hpp"
#include "topolab/families.hpp"
#include "topolab/io.hpp"
#include "topolab/polyprops.hpp"
#include "topolab/verify.hpp"

namespace topolab::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// stdout unless a path is given.
class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : stream_(&fallback), path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw FileError("cannot write " + path);
      stream_ = &file_;
    }
  }

  std::ostream& stream() { return *stream_; }

  void close() {
    stream_->flush();
    if (!path_.empty()) {
      file_.close();
      if (!file_) throw FileError("error writing " + path_);
    }
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  std::string path_;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + " '" + s + "'");
  }
  if (used != s.size()) throw UsageError("invalid " + what + " '" + s + "'");
  return v;
}

// --- validate ------------------------------------------------------------------

int cmd_validate(const std::string& in, std::ostream& out) {
  const std::string text = read_file(in);
  try {
    const Topology t = parse_topology(text);
    out << nlohmann::ordered_json{{"valid", true}, {"n", t.ground_size()}, {"size", t.size()}}.dump() << '\n';
    return kOk;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    out << nlohmann::ordered_json{{"valid", false}, {"error", e.what()}}.dump() << '\n';
    throw;
  }
}

// --- poly ----------------------------------------------------------------------

int cmd_poly(const std::string& in, const std::string& format, std::ostream& out) {
  const CoeffSeq p = open_polynomial(parse_topology(read_file(in)));
  if (format == "text") {
    out << p.to_string() << '\n';
  } else {
    out << to_json(p).dump() << '\n';
  }
  return kOk;
}

// --- check ---------------------------------------------------------------------

const std::vector<std::string>& known_props() {
  static const std::vector<std::string> props{"unimodal", "log-concave", "slc",     "niz",     "newton",
                                              "real-rooted", "dmax",      "t0",      "minimal", "partition"};
  return props;
}

nlohmann::ordered_json prop_value(const std::string& prop, const Topology& t, const CoeffSeq& p) {
  if (prop == "unimodal") return is_unimodal(p);
  if (prop == "log-concave") return is_log_concave(p);
  if (prop == "slc") return is_slc(p);
  if (prop == "niz") return !has_internal_zeros(p);
  if (prop == "newton") return newton_check(p);
  if (prop == "real-rooted") return is_real_rooted(p);
  if (prop == "dmax") return max_lc_ratio(p).to_string();
  if (prop == "t0") return is_t0(t);
  if (prop == "minimal") {
    nlohmann::ordered_json masks = nlohmann::ordered_json::array();
    for (SetMask m : minimal_open_sets(t)) masks.push_back(m.bits());
    return masks;
  }
  const auto type = is_partition_induced(t);
  if (!type) return nullptr;
  const auto a = type->alpha();
  return std::vector<int>(a.begin(), a.end());
}

int cmd_check(const std::string& in, const std::string& props_csv, const std::string& format,
              std::ostream& out) {
  const auto props = split_csv(props_csv);
  if (props.empty()) throw UsageError("--props is empty");
  for (const auto& p : props) {
    if (std::find(known_props().begin(), known_props().end(), p) == known_props().end()) {
      throw UsageError("unknown property '" + p + "'");
    }
  }
  const Topology t = parse_topology(read_file(in));
  const CoeffSeq poly = open_polynomial(t);
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  for (const auto& p : props) result[p] = prop_value(p, t, poly);
  if (format == "text") {
    for (const auto& [k, v] : result.items()) out << k << ": " << v.dump() << '\n';
  } else {
    out << result.dump() << '\n';
  }
  return kOk;
}

// --- construct -----------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::string partition;
  int n = 0;
  std::optional<int> l, j, i;
  std::string out;
  bool pretty = false;
};

FamilyId family_id(const ConstructArgs& a) {
  if (a.family.empty() == a.partition.empty()) throw UsageError("give exactly one of --family and --partition");
  if (!a.partition.empty()) {
    if (a.l || a.j || a.i) throw UsageError("--partition takes no --l/--j/--i");
    std::vector<int> alpha;
    for (const auto& s : split_csv(a.partition)) alpha.push_back(parse_int(s, "partition entry"));
    return FamilyId{"partition", a.n, std::nullopt, PartitionType(std::move(alpha))};
  }
  const FamilySpec& spec = find_family(a.family);
  if (spec.takes_partition) throw UsageError("use --partition for the partition family");
  std::optional<std::pair<char, int>> given;
  for (const auto& [flag, v] : {std::pair{'l', a.l}, std::pair{'j', a.j}, std::pair{'i', a.i}}) {
    if (!v) continue;
    if (given) throw UsageError("give at most one of --l, --j, --i");
    given.emplace(flag, *v);
  }
  if (given && given->first != spec.param) {
    throw UsageError(spec.key + (spec.param ? std::string(" takes --") + spec.param : std::string(" takes no parameter")));
  }
  FamilyId id{spec.key, a.n, std::nullopt, std::nullopt};
  if (given) id.param = given->second;
  return id;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const FamilyId id = family_id(a);
  const FamilyInstance inst = instantiate(id);
  nlohmann::json j = to_json(inst.topology);
  if (a.pretty) {
    nlohmann::json names = nlohmann::json::array();
    for (SetMask m : inst.topology.opens()) names.push_back(pretty(m, inst.topology.ground_size()));
    j["pretty_opens"] = std::move(names);
  }
  j["match_report"] = to_json(check(inst));
  Output sink(out, a.out);
  sink.stream() << j.dump(2) << '\n';
  sink.close();
  return kOk;
}

// --- enumerate -----------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  std::optional<std::size_t> min_card;
  bool t0 = false;
  bool iso = false;
  std::string strategy = "preorder";
  unsigned threads = 1;
  std::string out;
  std::string stats;
  bool gzip = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.gzip && a.out.empty()) throw UsageError("--gzip needs --out");
  EnumConfig cfg;
  cfg.n = a.n;
  cfg.min_card = a.min_card;
  cfg.require_t0 = a.t0;
  cfg.up_to_iso = a.iso;
  cfg.strategy = parse_strategy(a.strategy);
  cfg.thread_count = a.threads;

  EnumStats stats;
  if (a.gzip) {
    gzFile gz = gzopen(a.out.c_str(), "wb");
    if (!gz) throw FileError("cannot write " + a.out);
    bool ok = true;
    try {
      stats = enumerate_topologies(cfg, [&](const Topology& t) {
        const std::string line = to_json(t).dump() + '\n';
        if (ok && gzwrite(gz, line.data(), static_cast<unsigned>(line.size())) != static_cast<int>(line.size())) {
          ok = false;
        }
      });
    } catch (...) {
      gzclose(gz);
      throw;
    }
    if (gzclose(gz) != Z_OK || !ok) throw FileError("error writing " + a.out);
  } else {
    Output sink(out, a.out);
    stats = enumerate_topologies(cfg, [&](const Topology& t) { sink.stream() << to_json(t).dump() << '\n'; });
    sink.close();
  }

  const nlohmann::json summary = to_json(stats, true);
  err << summary.dump() << '\n';
  if (!a.stats.empty()) {
    Output sink(out, a.stats);
    sink.stream() << summary.dump(2) << '\n';
    sink.close();
  }
  return kOk;
}

// --- verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  bool all = false;
  int n_max = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string json;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.all == !a.theorem.empty()) throw UsageError("give exactly one of --theorem and --all");
  VerifyOptions opts;
  opts.n_max = a.n_max;
  opts.seed = a.seed;
  opts.threads = a.threads;
  const std::vector<TheoremReport> reports =
      a.all ? run_all(opts) : std::vector<TheoremReport>{run(a.theorem, opts)};

  nlohmann::json array = nlohmann::json::array();
  for (const TheoremReport& r : reports) array.push_back(to_json(r, a.timing));
  if (a.json.empty()) {
    out << array.dump(2) << '\n';
  } else {
    Output sink(out, a.json);
    sink.stream() << array.dump(2) << '\n';
    sink.close();
    for (const TheoremReport& r : reports) {
      out << r.id << ' ' << to_string(r.verdict) << " checked=" << r.checked_count << '\n';
    }
  }

  bool refuted = false;
  bool discrepancy = false;
  for (const TheoremReport& r : reports) {
    refuted = refuted || r.verdict == Verdict::Refuted;
    discrepancy = discrepancy || r.verdict == Verdict::Discrepancy;
  }
  if (refuted) return kRefuted;
  return discrepancy ? kDiscrepancy : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite topologies and their open set polynomials", "topolab"};
  app.require_subcommand(1);

  std::string in;
  std::string format = "json";

  auto* validate = app.add_subcommand("validate", "Check that a file holds a topology");
  validate->add_option("--in", in, "Topology JSON file")->required();

  auto* poly = app.add_subcommand("poly", "Print the open set polynomial");
  poly->add_option("--in", in, "Topology JSON file")->required();
  poly->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string props;
  auto* check_cmd = app.add_subcommand("check", "Evaluate polynomial and topology properties");
  check_cmd->add_option("--in", in, "Topology JSON file")->required();
  check_cmd->add_option("--props", props, "Comma-separated: unimodal,log-concave,slc,niz,newton,real-rooted,dmax,t0,minimal,partition")
      ->required();
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a catalog construction and compare it with its claims");
  construct->add_option("--family", ca.family, "Catalog key");
  construct->add_option("--partition", ca.partition, "Partition type alpha_1,alpha_2,...");
  construct->add_option("--n", ca.n, "Ground size")->required()->check(CLI::Range(1, kMaxGroundSize));
  construct->add_option("--l", ca.l);
  construct->add_option("--j", ca.j);
  construct->add_option("--i", ca.i);
  construct->add_option("--out", ca.out, "Output file");
  construct->add_flag("--pretty", ca.pretty, "Also list opens as element sets");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every topology on n points as JSON lines");
  enumerate->add_option("--n", ea.n, "Ground size")->required()->check(CLI::Range(1, kMaxPreorderSize));
  enumerate->add_option("--min-card", ea.min_card, "Keep topologies with at least this many opens");
  enumerate->add_flag("--t0", ea.t0, "Keep T0 topologies only");
  enumerate->add_flag("--iso", ea.iso, "One canonical representative per homeomorphism class");
  enumerate->add_option("--strategy", ea.strategy)->check(CLI::IsMember({"closure", "preorder", "both"}));
  enumerate->add_option("--threads", ea.threads)->check(CLI::Range(1u, 1024u));
  enumerate->add_option("--out", ea.out, "Output file");
  enumerate->add_option("--stats", ea.stats, "Write summary statistics to this file");
  enumerate->add_flag("--gzip", ea.gzip, "Compress --out with gzip");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run theorem checks");
  auto* theorem_opt = verify->add_option("--theorem", va.theorem, "Check key")->check(CLI::IsMember(theorem_keys()));
  auto* all_opt = verify->add_flag("--all", va.all, "Run every check");
  theorem_opt->excludes(all_opt);
  verify->add_option("--n-max", va.n_max, "Largest ground size")->required()->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Seed for randomized checks");
  verify->add_option("--threads", va.threads)->check(CLI::Range(1u, 1024u));
  verify->add_option("--json", va.json, "Write the report array here");
  verify->add_flag("--timing", va.timing, "Include elapsed times in the report");

  std::vector<std::string> storage{"topolab"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(in, out);
    if (poly->parsed()) return cmd_poly(in, format, out);
    if (check_cmd->parsed()) return cmd_check(in, props, format, out);
    if (construct->parsed()) return cmd_construct(ca, out);
    if (enumerate->parsed()) return cmd_enumerate(ea, out, err);
    if (verify->parsed()) return cmd_verify(va, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const FileError& e) {
    err << "file error: " << e.what() << '\n';
    return kDataError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kDataError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsage;
}

}  // namespace topolab::cli
