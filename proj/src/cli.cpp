#include "plurigenus/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "plurigenus/basket.hpp"
#include "plurigenus/bounds.hpp"
#include "plurigenus/oracle.hpp"

namespace plurigenus::cli {

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Threefold documents

BigInt json_integer(const json& node, const std::string& path) {
  if (node.is_number_integer()) return BigInt(node.get<long>());
  if (node.is_string()) {
    try {
      return parse_integer(node.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  throw ParseError(path + ": expected an integer");
}

std::int64_t json_small_integer(const json& node, const std::string& path) {
  if (!node.is_number_integer()) throw ParseError(path + ": expected an integer");
  return node.get<std::int64_t>();
}

Rational json_rational(const json& node, const std::string& path) {
  if (node.is_number_float()) {
    throw ParseError(path + ": floating-point literal not allowed, write the rational as a string");
  }
  if (node.is_number_integer()) return Rational(BigInt(node.get<long>()));
  if (!node.is_string()) throw ParseError(path + ": expected a rational string \"p/q\"");
  try {
    return Rational::parse(node.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const json& required(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Output

struct Outcome {
  json result = json::object();
  std::vector<std::string> text;
  int exit = kSuccess;

  // Records a value in both renderings.
  void put(const std::string& key, const std::string& value) {
    result[key] = value;
    text.push_back(key + " = " + value);
  }
  void put(const std::string& key, std::int64_t value) {
    result[key] = value;
    text.push_back(key + " = " + std::to_string(value));
  }
};

json bound_json(const BoundReport& b) {
  json j;
  j["base"] = b.base.get_str();
  j["exponent"] = b.exponent.get_str();
  j["digits"] = b.digits_estimate;
  j["expanded"] = b.expanded ? json(b.expanded->get_str()) : json(nullptr);
  return j;
}

json report_json(const oracle::VerificationReport& r) {
  json j;
  j["check"] = r.check;
  j["passed"] = r.passed();
  j["ranges"] = r.ranges;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["note"] = r.note;
  return j;
}

std::string report_text(const oracle::VerificationReport& r) {
  std::string line = std::string(r.passed() ? "PASS " : "FAIL ") + r.check + ": " +
                     std::to_string(r.cases) + " cases over " + r.ranges;
  if (r.seed) line += ", seed " + std::to_string(*r.seed);
  if (!r.note.empty()) line += ", " + r.note;
  if (r.counterexample) {
    line += "; " + std::to_string(r.failures) + " failures, first: " + *r.counterexample;
  }
  return line;
}

std::vector<BigInt> parse_integer_list(const std::string& csv) {
  std::vector<BigInt> out;
  std::string_view rest = csv;
  for (;;) {
    const auto comma = rest.find(',');
    out.push_back(parse_integer(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::int64_t to_small(const BigInt& v, const std::string& name) {
  if (!v.fits_slong_p()) throw DomainError(name + " is out of range");
  return v.get_si();
}

std::int64_t small_arg(const std::string& text, const std::string& name) {
  return to_small(parse_integer(text), name);
}

std::uint64_t threshold_arg(const std::optional<std::string>& text) {
  if (!text) return 0;
  const BigInt v = parse_integer(*text);
  if (v < 0) throw DomainError("--expand-threshold must be nonnegative");
  return v.fits_ulong_p() ? v.get_ui() : ~0UL;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "malformed_input";
  if (dynamic_cast<const DataError*>(&e)) return "data_error";
  if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
  if (dynamic_cast<const InternalError*>(&e)) return "internal_error";
  return "error";
}

int error_exit(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kMalformedInput;
  if (dynamic_cast<const InternalError*>(&e)) return kInternalError;
  return kDomainError;
}

}  // namespace

ThreefoldData parse_threefold_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: top level must be an object");
  BigInt chi = json_integer(required(doc, "chi_O", "document"), "chi_O");
  Rational K3 = json_rational(required(doc, "K3", "document"), "K3");
  Basket basket;
  if (const auto it = doc.find("basket"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("basket: expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "basket[" + std::to_string(i) + "]";
      const json& entry = (*it)[i];
      if (!entry.is_object()) throw ParseError(path + ": expected an object {r, a, count}");
      const std::int64_t r = json_small_integer(required(entry, "r", path), path + ".r");
      const std::int64_t a = json_small_integer(required(entry, "a", path), path + ".a");
      std::int64_t count = 1;
      if (entry.contains("count")) count = json_small_integer(entry["count"], path + ".count");
      try {
        basket.add(QuotientSingularity(r, a), count);
      } catch (const DomainError& e) {
        throw DomainError(path + ": " + e.what());
      }
    }
  }
  return ThreefoldData(std::move(chi), std::move(K3), std::move(basket));
}

std::string to_threefold_document(const ThreefoldData& x) {
  json doc;
  doc["chi_O"] = x.chi_O().fits_slong_p() ? json(x.chi_O().get_si()) : json(x.chi_O().get_str());
  doc["K3"] = x.K3().to_string();
  doc["basket"] = json::array();
  for (const auto& e : x.basket().entries()) {
    doc["basket"].push_back({{"r", e.point.order()}, {"a", e.point.weight()}, {"count", e.count}});
  }
  return doc.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plurigenera of canonical threefolds and effective finiteness bounds", "plurigenus"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "machine"}));

  json inputs = json::object();
  auto opt = [&](CLI::App* sub, const std::string& name, std::string& into,
                 const std::string& help, bool required = true) {
    sub->add_option(name, into, help)->required(required);
  };

  // Threefold-document commands.
  std::string input_path, m_text;
  bool drop_volume = false;
  auto* chi_cmd = app.add_subcommand("chi", "chi(mK) by the plurigenus formula");
  opt(chi_cmd, "--input", input_path, "Threefold document (JSON)");
  opt(chi_cmd, "--m", m_text, "Multiple m >= 0");
  auto* pg_cmd = app.add_subcommand("plurigenus", "h^0(mK) for m >= 2");
  opt(pg_cmd, "--input", input_path, "Threefold document (JSON)");
  opt(pg_cmd, "--m", m_text, "Multiple m >= 2");
  pg_cmd->add_flag("--drop-volume-term", drop_volume,
                   "Conservative lower bound ignoring the K^3 term");
  auto* index_cmd = app.add_subcommand("index", "Index of the basket");
  opt(index_cmd, "--input", input_path, "Threefold document (JSON)");
  auto* validate_cmd = app.add_subcommand("validate", "Integrality and normalization checks");
  opt(validate_cmd, "--input", input_path, "Threefold document (JSON)");
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Coefficients of t -> chi(r t K)");
  opt(hilbert_cmd, "--input", input_path, "Threefold document (JSON)");

  // Local contributions.
  std::string r_text, a_text, form = "closed";
  auto* l_cmd = app.add_subcommand("l", "Local contribution l(1/r(a,-a,1), m)");
  opt(l_cmd, "--r", r_text, "Order r >= 2 (>= 1 for --form onewave)");
  opt(l_cmd, "--a", a_text, "Weight a, coprime to r", false);
  opt(l_cmd, "--m", m_text, "m >= 0");
  l_cmd->add_option("--form", form, "Evaluation route")
      ->check(CLI::IsMember({"direct", "closed", "onewave"}));
  std::string alpha_text, beta_text;
  auto* fl_cmd = app.add_subcommand("fletcher", "Check l(1/alpha(a,-a,1),m) >= l(1/beta(1,-1,1),m) for all a");
  opt(fl_cmd, "--alpha", alpha_text, "alpha >= 2");
  opt(fl_cmd, "--beta", beta_text, "0 <= beta <= alpha");
  opt(fl_cmd, "--m", m_text, "1 <= m <= (alpha+1)/2");

  // Bounds.
  auto* bounds_cmd = app.add_subcommand("bounds", "Birationality exponents");
  bounds_cmd->require_subcommand(1);
  std::string l_text, C_text;
  auto* han_cmd = bounds_cmd->add_subcommand("hanamura", "m0 for index r");
  opt(han_cmd, "--r", r_text, "Index r >= 1");
  auto* kol_cmd = bounds_cmd->add_subcommand("kollar", "11 l + 5");
  opt(kol_cmd, "--l", l_text, "l >= 1");
  auto* bir_cmd = bounds_cmd->add_subcommand("birationality", "R and m for chi(O) <= C");
  opt(bir_cmd, "--C", C_text, "C >= 1");
  auto* cert_cmd = bounds_cmd->add_subcommand("certificate", "Lower bound for h^0(13C K)");
  opt(cert_cmd, "--C", C_text, "C >= 1");

  std::string s_text, K3_text, c1c2_text, c3_text, chi_text, base_text, h0_text;
  std::optional<std::string> threshold_text;
  auto* df_cmd = app.add_subcommand("defranchis", "Map-count bound for smooth threefolds");
  opt(df_cmd, "--s", s_text, "s >= 2 with sK very ample");
  opt(df_cmd, "--K3", K3_text, "K^3 (rational string)");
  opt(df_cmd, "--c1c2", c1c2_text, "c_1 c_2");
  opt(df_cmd, "--c3", c3_text, "c_3");
  opt(df_cmd, "--chi", chi_text, "chi(O)");
  df_cmd->add_option("--expand-threshold", threshold_text, "Expand when at most this many digits");
  auto* mc_cmd = app.add_subcommand("map-count", "base^(h0^2 - 1)");
  opt(mc_cmd, "--base", base_text, "Dual degree bound >= 1");
  opt(mc_cmd, "--h0", h0_text, "h^0(E) >= 1");
  mc_cmd->add_option("--expand-threshold", threshold_text, "Expand when at most this many digits");

  std::string n_text, v_text, d_text, i_text, h_text, p_text;
  auto* dd_cmd = app.add_subcommand("dual-degree", "Degree of the dual variety");
  opt(dd_cmd, "--n", n_text, "Dimension n >= 1");
  opt(dd_cmd, "--v", v_text, "c_1(L)^i c_{n-i}(Z) for i = 0..n, comma separated");
  auto* bz_cmd = app.add_subcommand("bezout", "a d^i");
  opt(bz_cmd, "--a", a_text, "Degree a");
  opt(bz_cmd, "--d", d_text, "Equation degree d");
  opt(bz_cmd, "--i", i_text, "Dimension i");
  auto* cb_cmd = app.add_subcommand("chi-bound", "Upper bound for chi(O_Y)");
  cb_cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  opt(cb_cmd, "--n", n_text, "Dimension n");
  opt(cb_cmd, "--h", h_text, "h^i(O_X) for i = 0.., comma separated");
  auto* emb_cmd = app.add_subcommand("embedding", "Embedding and degree bounds");
  opt(emb_cmd, "--r", r_text, "Index r");
  opt(emb_cmd, "--K3", K3_text, "K^3 (rational string)");
  opt(emb_cmd, "--p", p_text, "p, divisible by r, >= 9r");

  std::string check_name, seed_text = "1";
  auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force cross-checks");
  verify_cmd->add_option("--check", check_name, "Single check")
      ->check(CLI::IsMember(oracle::check_names()));
  verify_cmd->add_option("--seed", seed_text, "Seed for randomized checks");

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
    if (format == "machine") {
      json j{{"command", nullptr}, {"inputs", json::object()}, {"result", nullptr},
             {"errors", json::array({{{"kind", "malformed_input"}, {"message", e.what()}}})}};
      out << j.dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kMalformedInput;
  }

  std::string command;
  for (auto* sub = app.get_subcommands().front();; ) {
    command += (command.empty() ? "" : " ") + sub->get_name();
    const auto nested = sub->get_subcommands();
    if (nested.empty()) break;
    sub = nested.front();
  }
  const auto collect = [&](CLI::App* sub) {
    for (const CLI::Option* o : sub->get_options()) {
      if (o->count() == 0 || o->get_name() == "--help") continue;
      std::string key = o->get_name();
      while (!key.empty() && key.front() == '-') key.erase(key.begin());
      inputs[key] = o->get_expected_min() == 0 ? json(true) : json(o->as<std::string>());
    }
  };
  for (CLI::App* sub = app.get_subcommands().front();;) {
    collect(sub);
    const auto nested = sub->get_subcommands();
    if (nested.empty()) break;
    sub = nested.front();
  }

  Outcome o;
  json errors = json::array();
  try {
    const auto load = [&] { return parse_threefold_document(read_file(input_path)); };
    if (chi_cmd->parsed()) {
      const Rational v = chi_mK(load(), small_arg(m_text, "m"));
      o.result["value"] = v.to_string();
      o.text.push_back(v.to_string());
    } else if (pg_cmd->parsed()) {
      const auto mode = drop_volume ? PlurigenusMode::drop_volume_term : PlurigenusMode::full;
      const BigInt v = plurigenus(load(), small_arg(m_text, "m"), mode);
      o.result["value"] = v.get_str();
      o.text.push_back(v.get_str());
    } else if (index_cmd->parsed()) {
      const std::int64_t v = load().index();
      o.result["value"] = v;
      o.text.push_back(std::to_string(v));
    } else if (validate_cmd->parsed()) {
      const ValidationReport rep = validate(load());
      o.result["passed"] = rep.passed;
      o.result["swept_to"] = rep.swept_to;
      if (rep.passed) {
        o.text.push_back("pass (m = 0.." + std::to_string(rep.swept_to) + ")");
        o.result["failed_check"] = nullptr;
      } else {
        o.result["failed_check"] = rep.failed_check;
        o.result["failed_m"] = rep.failed_m ? json(*rep.failed_m) : json(nullptr);
        o.result["failed_value"] = rep.failed_value ? json(rep.failed_value->to_string()) : json(nullptr);
        std::string line = "fail: " + rep.failed_check;
        if (rep.failed_m) line += " at m=" + std::to_string(*rep.failed_m);
        if (rep.failed_value) line += " (value " + rep.failed_value->to_string() + ")";
        o.text.push_back(line);
        o.exit = kDomainError;
      }
    } else if (hilbert_cmd->parsed()) {
      const HilbertCoefficients h = hilbert_coefficients(load());
      o.put("c3", h.c3.to_string());
      o.put("c2", h.c2.to_string());
      o.put("c1", h.c1.to_string());
      o.put("c0", h.c0.to_string());
    } else if (l_cmd->parsed()) {
      const std::int64_t r = small_arg(r_text, "r");
      const std::int64_t m = small_arg(m_text, "m");
      const std::int64_t a = a_text.empty() ? 1 : small_arg(a_text, "a");
      Rational v;
      if (form == "onewave") {
        if (r >= 2 && a != 1 && a != r - 1) {
          throw DomainError("--form onewave applies to the type 1/r(1,-1,1) only (a = 1)");
        }
        v = l_onewave(r, m);
      } else {
        const QuotientSingularity q(r, a);
        v = form == "direct" ? l_direct(q, m) : l_closed(q, m);
      }
      o.result["value"] = v.to_string();
      o.text.push_back(v.to_string());
    } else if (fl_cmd->parsed()) {
      const bool v = fletcher_dominates(small_arg(alpha_text, "alpha"), small_arg(beta_text, "beta"),
                                        small_arg(m_text, "m"));
      o.result["value"] = v;
      o.text.push_back(v ? "true" : "false");
    } else if (han_cmd->parsed()) {
      o.put("m0", hanamura_m0(small_arg(r_text, "r")));
    } else if (kol_cmd->parsed()) {
      o.put("exponent", kollar_exponent(small_arg(l_text, "l")));
    } else if (bir_cmd->parsed()) {
      const BirationalityExponent b = birationality_exponent(small_arg(C_text, "C"));
      o.put("R", b.R.get_str());
      o.put("m", b.m.get_str());
      o.put("m_digits", static_cast<std::int64_t>(digit_count(b.m)));
    } else if (cert_cmd->parsed()) {
      const BirationalityCertificate c = birationality_certificate(small_arg(C_text, "C"));
      o.result["lower_bound"] = c.lower_bound.to_string();
      o.result["ok"] = c.ok;
      o.result["linear_term"] = c.linear_term.to_string();
      o.result["l_term"] = c.l_term.to_string();
      o.text.push_back("lower_bound = " + c.lower_bound.to_string() + (c.ok ? ", ok" : ", NOT ok"));
      o.text.push_back("linear_term = " + c.linear_term.to_string());
      o.text.push_back("l_term = " + c.l_term.to_string());
      if (!c.ok) o.exit = kDomainError;
    } else if (df_cmd->parsed()) {
      const DeFranchisBound b = defranchis_threefold_bound(
          small_arg(s_text, "s"), Rational::parse(K3_text), parse_integer(c1c2_text),
          parse_integer(c3_text), parse_integer(chi_text), threshold_arg(threshold_text));
      o.result["base"] = b.base.get_str();
      o.result["h0"] = b.h0.get_str();
      o.result["bound"] = bound_json(b.report);
      o.text.push_back("base = " + b.base.get_str());
      o.text.push_back("h0 = " + b.h0.get_str());
      o.text.push_back("bound = " + b.report.to_text(threshold_text.has_value()));
    } else if (mc_cmd->parsed()) {
      const BoundReport b =
          map_count_bound(parse_integer(base_text), parse_integer(h0_text), threshold_arg(threshold_text));
      o.result["bound"] = bound_json(b);
      o.text.push_back("bound = " + b.to_text(threshold_text.has_value()));
    } else if (dd_cmd->parsed()) {
      const BigInt v = dual_degree(ChernData(static_cast<int>(small_arg(n_text, "n")), parse_integer_list(v_text)));
      o.result["value"] = v.get_str();
      o.text.push_back(v.get_str());
      if (v <= 0) {
        o.result["warning"] = "non-positive dual degree; input is degenerate";
        err << "warning: non-positive dual degree; input is degenerate\n";
      }
    } else if (bz_cmd->parsed()) {
      const BigInt i = parse_integer(i_text);
      if (i < 0 || !i.fits_ulong_p()) throw DomainError("--i must be a nonnegative integer");
      const BigInt v = bezout_bound(parse_integer(a_text), parse_integer(d_text), i.get_ui());
      o.result["value"] = v.get_str();
      o.text.push_back(v.get_str());
    } else if (cb_cmd->parsed()) {
      const BigInt v =
          chi_upper_bound(HodgeData(static_cast<int>(small_arg(n_text, "n")), parse_integer_list(h_text)));
      o.result["value"] = v.get_str();
      o.text.push_back(v.get_str());
    } else if (emb_cmd->parsed()) {
      const EmbeddingBounds b =
          embedding_bounds(small_arg(r_text, "r"), Rational::parse(K3_text), small_arg(p_text, "p"));
      o.put("N_max", b.N_max.get_str());
      o.put("degX_max", b.degX_max.get_str());
      o.put("degY_max", b.degY_max.get_str());
      o.put("graph_deg_max", b.graph_deg_max.get_str());
    } else if (verify_cmd->parsed()) {
      const BigInt seed_big = parse_integer(seed_text);
      if (seed_big < 0 || !seed_big.fits_ulong_p()) throw DomainError("--seed must be a nonnegative integer");
      const std::uint64_t seed = seed_big.get_ui();
      std::vector<oracle::VerificationReport> reports;
      if (check_name.empty()) {
        reports = oracle::verify_all(seed);
      } else {
        reports.push_back(oracle::verify_named(check_name, seed));
      }
      o.result["reports"] = json::array();
      for (const auto& r : reports) {
        o.result["reports"].push_back(report_json(r));
        o.text.push_back(report_text(r));
        if (!r.passed()) o.exit = kDomainError;
      }
    }
  } catch (const std::exception& e) {
    errors.push_back({{"kind", error_kind(e)}, {"message", e.what()}});
    o.exit = error_exit(e);
    o.result = nullptr;
    o.text.clear();
  }

  if (format == "machine") {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = o.result;
    j["errors"] = errors;
    out << j.dump() << '\n';
  } else {
    for (const auto& line : o.text) out << line << '\n';
    for (const auto& e : errors) err << "error: " << e["message"].get<std::string>() << '\n';
  }
  return o.exit;
}

}  // namespace plurigenus::cli
