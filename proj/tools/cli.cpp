#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "weylq/charquasi.hpp"
#include "weylq/compat.hpp"
#include "weylq/deform.hpp"
#include "weylq/ehrhart.hpp"
#include "weylq/errors.hpp"
#include "weylq/eulerian.hpp"

namespace weylq::cli {

using nlohmann::json;

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::string valid_roots(const RootSystem& rs) {
  std::string s;
  for (const auto& r : rs.positive_roots()) s += (s.empty() ? "" : " ") + tuple_string(r.coeffs);
  return s;
}

Coeffs parse_tuple(const RootSystem& rs, const std::string& body) {
  Coeffs c;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ValidationError("empty entry in tuple (" + body + ")");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ValidationError("tuple entry '" + item + "' is not an integer");
    }
    if (used != item.size()) throw ValidationError("tuple entry '" + item + "' is not an integer");
    c.push_back(v);
  }
  if (static_cast<int>(c.size()) != rs.rank())
    throw ValidationError("tuple (" + body + ") has " + std::to_string(c.size()) +
                          " entries; rank is " + std::to_string(rs.rank()));
  return c;
}

// Parses "(..)<sep>(..)..." into root indices.
std::vector<int> parse_tuples(const RootSystem& rs, const std::string& text, char sep) {
  static const std::regex tuple_re(R"(\(([^()]*)\))");
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::smatch m;
    const std::string rest = text.substr(pos);
    if (!std::regex_search(rest, m, tuple_re, std::regex_constants::match_continuous))
      throw ValidationError("malformed subset near '" + rest + "'");
    const Coeffs c = parse_tuple(rs, m[1].str());
    const auto idx = rs.find_positive(c);
    if (!idx)
      throw ValidationError(tuple_string(c) + " is not a positive root of " + rs.spec().name() +
                            "; valid roots: " + valid_roots(rs));
    out.push_back(*idx);
    pos += m.length(0);
    if (pos < text.size()) {
      if (text[pos] != sep)
        throw ValidationError(std::string("expected '") + sep + "' between tuples in '" + text + "'");
      ++pos;
      if (pos == text.size()) throw ValidationError("trailing separator in '" + text + "'");
    }
  }
  if (out.empty()) throw ValidationError("no tuples in '" + text + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OffsetInterval parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ValidationError("interval '" + text + "' must be lo:hi");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    OffsetInterval iv{std::stoll(a, &u1), std::stoll(b, &u2)};
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument("trailing");
    if (iv.lo > iv.hi) throw ValidationError("interval '" + text + "' has lo > hi");
    return iv;
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw ValidationError("interval '" + text + "' must be two integers lo:hi");
  }
}

Type1Variant type1_variant_of(OffsetInterval iv) {
  if (iv.lo <= 0 && iv.hi >= 0) return SymmetricInterval{-iv.lo, iv.hi};
  if (iv.lo == 1) return PositiveInterval{iv.hi};
  throw DomainError("closed formulas cover intervals [-a,b] with a,b >= 0 and [1,b]; got [" +
                    std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]");
}

std::string variant_name(const Type1Variant& v) {
  return std::holds_alternative<SymmetricInterval>(v) ? "symmetric" : "positive";
}

struct Options {
  std::string type;
  int rank = 0;
  std::string subset = "full";
  std::vector<std::string> intervals;
  std::string variant;
  int terms = 60;
  std::optional<int> period_override;
  std::optional<std::uint64_t> weyl_cap;
  bool json = false;
};

std::uint64_t resolve_cap(const Options& o) {
  if (o.weyl_cap) return *o.weyl_cap;
  if (const char* env = std::getenv("WEYLQ_WEYL_CAP")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto cap = std::stoull(s, &used);
      if (used == s.size()) return cap;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("WEYLQ_WEYL_CAP='") + env + "' is not a nonnegative integer");
  }
  return kDefaultWeylCap;
}

RootSystem system_of(const Options& o) {
  if (o.type.size() != 1) throw ValidationError("--type must be one letter A..G");
  return build_root_system({family_from_letter(o.type[0]), o.rank});
}

// Formula for a deformation given by literal intervals. A positive interval on
// Psi with a symmetric one on the complement is the mirror of case (ii) and is
// evaluated on the complement with the intervals swapped.

QuasiPolynomial deform_formula(const WeylGroup& group, const RootSubset& psi,
                               const std::vector<OffsetInterval>& ivs, std::string& kind) {
  const RootSystem& rs = group.root_system();
  if (ivs.size() == 1) {
    const auto v = type1_variant_of(ivs[0]);
    kind = "type1-" + variant_name(v);
    return cqp_type1_formula(group, psi, v);
  }
  if (ivs.size() != 2) throw ValidationError("deform takes one or two --interval values");
  const auto v1 = type1_variant_of(ivs[0]);
  const auto v2 = type1_variant_of(ivs[1]);
  const auto& [ab, cd] = std::pair{ivs[0], ivs[1]};
  const bool s1 = std::holds_alternative<SymmetricInterval>(v1);
  const bool s2 = std::holds_alternative<SymmetricInterval>(v2);
  if (s1 && s2) {
    kind = "type2-i";
    return cqp_type2_formula(group, psi, Type2CaseI{-ab.lo, ab.hi, -cd.lo, cd.hi});
  }
  if (s1) {
    kind = "type2-ii";
    return cqp_type2_formula(group, psi, Type2CaseII{-ab.lo, ab.hi, cd.hi});
  }
  if (s2) {
    kind = "type2-ii-mirrored";
    return cqp_type2_formula(group, psi.complement(rs), Type2CaseII{-cd.lo, cd.hi, ab.hi});
  }
  kind = "type2-iii";
  return cqp_type2_formula(group, psi, Type2CaseIII{ab.hi, cd.hi});
}

ArrangementSpec deform_spec(const RootSystem& rs, const RootSubset& psi,
                            const std::vector<OffsetInterval>& ivs) {
  if (ivs.size() == 1) return type1_spec(rs, psi, ivs[0]);
  return type2_spec(rs, psi, ivs.at(0), ivs.at(1));
}

void print_series(std::ostream& out, const SeriesTruncation& s) {
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) out << (k ? " " : "") << s.coeffs[k].get_str();
  out << "\n";
}

json series_json(const SeriesTruncation& s) {
  json a = json::array();
  for (const auto& c : s.coeffs) a.push_back(rational_json(c));
  return a;
}

json witness_json(const CompatResult& r) {
  if (!r.witness) return nullptr;
  return json{{"residue", r.witness->residue}, {"q", r.witness->q}};
}

class Runner {
 public:
  Runner(const std::string& command, const Options& o, std::ostream& out)
      : command_(command), o_(o), out_(out), rs_(system_of(o)) {
    query_ = {{"command", command}, {"type", o.type}, {"rank", o.rank}};
  }

  int run() {
    if (command_ == "info") return info();
    if (command_ == "char-quasi") return char_quasi_cmd();
    if (command_ == "eulerian") return eulerian();
    if (command_ == "ehrhart") return ehrhart();
    if (command_ == "compat") return compat();
    if (command_ == "ideals") return ideals();
    if (command_ == "deform") return deform();
    if (command_ == "genfunc") return genfunc();
    if (command_ == "verify") return verify();
    throw ValidationError("unknown command " + command_);
  }

 private:
  const WeylGroup& group() {
    if (!group_) group_.emplace(rs_, resolve_cap(o_));
    return *group_;
  }

  RootSubset subset() {
    query_["subset"] = o_.subset;
    return parse_subset(rs_, o_.subset);
  }

  std::vector<OffsetInterval> intervals() {
    std::vector<OffsetInterval> ivs;
    for (const auto& s : o_.intervals) ivs.push_back(parse_interval(s));
    query_["intervals"] = o_.intervals;
    return ivs;
  }

  void emit(const json& result) {
    out_ << json{{"system", system_json(rs_)}, {"query", query_}, {"result", result}}.dump(2)
         << "\n";
  }

  void header() { out_ << rs_.spec().name() << "\n"; }

  int info() {
    const auto& roots = rs_.positive_roots();
    if (o_.json) {
      json r = {{"weyl_order", rs_.weyl_order()},
                {"alcove_count", rs_.alcove_count()},
                {"num_positive_roots", roots.size()},
                {"highest_root", tuple_string(rs_.highest_root().coeffs)},
                {"positive_roots", subset_tuples(rs_, RootSubset::full(rs_))}};
      emit(r);
      return 0;
    }
    out_ << "system   " << rs_.spec().name() << "\n";
    out_ << "h        " << rs_.coxeter_number() << "\n";
    out_ << "f        " << rs_.index_of_connection() << "\n";
    out_ << "marks    " << tuple_string(rs_.marks()) << "\n";
    out_ << "#W       " << rs_.weyl_order() << "\n";
    out_ << "N        " << rs_.alcove_count() << "\n";
    out_ << "|Phi+|   " << roots.size() << "\n";
    out_ << "roots   ";
    for (const auto& r : roots) out_ << " " << tuple_string(r.coeffs);
    out_ << "\n";
    return 0;
  }

  int char_quasi_cmd() {
    const RootSubset psi = subset();
    CharQuasiOptions opts;
    opts.period_override = o_.period_override;
    if (o_.period_override) query_["period_override"] = *o_.period_override;
    ArrangementSpec spec = subset_spec(rs_, psi);
    if (!o_.intervals.empty()) {
      spec = deform_spec(rs_, psi, intervals());
      opts.min_q = deformation_threshold(rs_, spec);
    }
    const QuasiPolynomial qp = char_quasi(spec, opts);
    if (o_.json) {
      emit(qp_json(qp));
    } else {
      out_ << to_string(qp) << "\n";
    }
    return 0;
  }

  int eulerian() {
    const std::string v = o_.variant.empty() ? "E" : o_.variant;
    query_["variant"] = v;
    RationalPolynomial p;
    if (v == "E")
      p = eulerian_poly(group(), subset());
    else if (v == "M")
      p = m_poly(group(), subset());
    else if (v == "generalized")
      p = generalized_eulerian(group());
    else
      throw ValidationError("eulerian --variant must be E, M or generalized");
    if (o_.json)
      emit(polynomial_json(p));
    else
      out_ << p.to_string("t") << "\n";
    return 0;
  }

  int ehrhart() {
    const std::string v = o_.variant.empty() ? "closed" : o_.variant;
    query_["variant"] = v;
    QuasiPolynomial qp;
    if (v == "closed")
      qp = ehrhart_closed_qp(rs_);
    else if (v == "open")
      qp = ehrhart_open_qp(rs_);
    else
      throw ValidationError("ehrhart --variant must be closed or open");
    if (o_.json)
      emit(qp_json(qp));
    else
      out_ << to_string(qp) << "\n";
    return 0;
  }

  int compat() {
    if (o_.subset == "ideal-all") {
      query_["subset"] = o_.subset;
      json rows = json::array();
      bool all = true;
      for (const auto& ideal : enumerate_ideals(rs_)) {
        const auto r = is_compatible(group(), ideal);
        all = all && r.compatible;
        rows.push_back({{"subset", subset_tuples(rs_, ideal)}, {"compatible", r.compatible}});
        if (!o_.json) {
          out_ << (r.compatible ? "compatible   " : "incompatible ") << "{";
          const auto t = subset_tuples(rs_, ideal);
          for (std::size_t k = 0; k < t.size(); ++k) out_ << (k ? "," : "") << t[k];
          out_ << "}\n";
        }
      }
      if (o_.json)
        emit({{"ideals", rows}, {"all_compatible", all}, {"count", rows.size()}});
      else
        out_ << rows.size() << " ideals, " << (all ? "all compatible" : "not all compatible")
             << "\n";
      return 0;
    }
    const auto r = is_compatible(group(), subset());
    if (o_.json) {
      emit({{"compatible", r.compatible},
            {"witness", witness_json(r)},
            {"characteristic", qp_json(r.characteristic)},
            {"formula", qp_json(r.formula)}});
      return 0;
    }
    out_ << (r.compatible ? "compatible" : "incompatible");
    if (r.witness)
      out_ << " (sides differ first at q = " << r.witness->q << ", residue " << r.witness->residue
           << ")";
    out_ << "\nchi:\n" << to_string(r.characteristic) << "\nformula:\n"
         << to_string(r.formula) << "\n";
    return 0;
  }

  int ideals() {
    const auto all = enumerate_ideals(rs_);
    json rows = json::array();
    for (const auto& ideal : all) rows.push_back(subset_tuples(rs_, ideal));
    if (o_.json) {
      emit({{"count", all.size()}, {"ideals", rows}});
      return 0;
    }
    for (const auto& row : rows) {
      out_ << "{";
      for (std::size_t k = 0; k < row.size(); ++k) out_ << (k ? "," : "") << row[k].get<std::string>();
      out_ << "}\n";
    }
    out_ << all.size() << " ideals\n";
    return 0;
  }

  int deform() {
    const RootSubset psi = subset();
    const auto ivs = intervals();
    if (ivs.empty()) throw ValidationError("deform needs --interval lo:hi (once or twice)");
    std::string kind;
    const QuasiPolynomial qp = deform_formula(group(), psi, ivs, kind);
    const std::string short_kind = kind.substr(kind.find('-') + 1);
    if (!o_.variant.empty() && o_.variant != kind && o_.variant != short_kind &&
        !(o_.variant == "ii" && short_kind == "ii-mirrored"))
      throw ValidationError("--variant " + o_.variant + " does not match the intervals (" + kind +
                            ")");
    query_["variant"] = kind;
    if (o_.json)
      emit(qp_json(qp));
    else
      out_ << kind << "\n" << to_string(qp) << "\n";
    return 0;
  }

  int genfunc() {
    query_["terms"] = o_.terms;
    const auto g = verify_genfunc(group(), subset(), o_.terms);
    if (o_.json) {
      emit({{"equal", g.equal},
            {"characteristic", series_json(g.characteristic)},
            {"rational", series_json(g.rational)}});
      return 0;
    }
    out_ << (g.equal ? "series agree" : "series differ") << " through t^" << o_.terms << "\n";
    out_ << "characteristic: ";
    print_series(out_, g.characteristic);
    out_ << "rational:       ";
    print_series(out_, g.rational);
    return 0;
  }

  // Cross-checks independent routes; disagreement is an internal
  // inconsistency (exit 4). Deformation checks only run when the formula is
  // asserted, i.e. for compatible subsets.
  int verify() {
    query_["terms"] = o_.terms;
    const RootSubset psi = subset();
    const auto c = is_compatible(group(), psi);
    const auto g = verify_genfunc(group(), psi, o_.terms);
    json r = {{"compatible", c.compatible},
              {"witness", witness_json(c)},
              {"genfunc_equal", g.equal},
              {"criteria_agree", c.compatible == g.equal}};
    bool ok = c.compatible == g.equal;
    if (!o_.intervals.empty()) {
      const auto ivs = intervals();
      if (c.compatible) {
        std::string kind;
        const QuasiPolynomial formula = deform_formula(group(), psi, ivs, kind);
        const auto check = verify_deform(rs_, deform_spec(rs_, psi, ivs), formula);
        r["deform"] = {{"kind", kind}, {"equal", check.equal}};
        ok = ok && check.equal;
      } else {
        r["deform"] = nullptr;
      }
    }
    r["ok"] = ok;
    if (o_.json) {
      emit(r);
    } else {
      out_ << "compatible:       " << (c.compatible ? "yes" : "no") << "\n";
      out_ << "genfunc agrees:   " << (g.equal ? "yes" : "no") << "\n";
      if (r.contains("deform")) {
        if (r["deform"].is_null())
          out_ << "deformation:      skipped (subset not compatible)\n";
        else
          out_ << "deformation:      " << r["deform"]["kind"].get<std::string>() << " "
               << (r["deform"]["equal"].get<bool>() ? "matches" : "differs") << "\n";
      }
      out_ << (ok ? "OK" : "MISMATCH") << "\n";
    }
    if (!ok) throw InconsistencyError("verification routes disagree");
    return 0;
  }

  std::string command_;
  const Options& o_;
  std::ostream& out_;
  RootSystem rs_;
  std::optional<WeylGroup> group_;
  json query_;
};

}  // namespace

std::string tuple_string(const Coeffs& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::vector<std::string> subset_tuples(const RootSystem& rs, const RootSubset& psi) {
  std::vector<std::string> out;
  for (int k : psi.indices()) out.push_back(tuple_string(rs.positive_roots()[k].coeffs));
  return out;
}

RootSubset parse_subset(const RootSystem& rs, const std::string& expr) {
  const std::string e = strip(expr);
  if (e == "full") return RootSubset::full(rs);
  if (e == "empty") return RootSubset::empty();
  if (e.rfind("minus:", 0) == 0) {
    const auto idx = parse_tuples(rs, e.substr(6), ',');
    if (idx.size() != 1) throw ValidationError("minus: takes exactly one root");
    std::vector<int> keep;
    for (int k = 0; k < rs.num_positive_roots(); ++k)
      if (k != idx[0]) keep.push_back(k);
    return RootSubset::from_indices(rs, keep);
  }
  if (e.rfind("ideal:", 0) == 0)
    return lower_closure(rs, RootSubset::from_indices(rs, parse_tuples(rs, e.substr(6), ';')));
  if (!e.empty() && e.front() == '(') return RootSubset::from_indices(rs, parse_tuples(rs, e, ','));
  throw ValidationError("unrecognized subset expression '" + expr +
                        "'; use full, empty, minus:(..), ideal:(..);(..) or (..),(..)");
}

json rational_json(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ValidationError("rational must be a string \"p/q\"");
  Rational r;
  if (r.set_str(j.get<std::string>(), 10) != 0)
    throw ValidationError("malformed rational '" + j.get<std::string>() + "'");
  if (r.get_den() == 0) throw ValidationError("zero denominator");
  r.canonicalize();
  return r;
}

json polynomial_json(const RationalPolynomial& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(rational_json(x));
  return {{"degree", p.degree()}, {"coeffs_ascending", c}};
}

RationalPolynomial polynomial_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs_ascending")) c.push_back(rational_from_json(x));
  return RationalPolynomial(std::move(c));
}

json qp_json(const QuasiPolynomial& qp) {
  json cs = json::array();
  for (int k = 1; k <= qp.period(); ++k) {
    json c = json::array();
    for (const auto& x : qp.constituent(k).coeffs()) c.push_back(rational_json(x));
    cs.push_back({{"residue", k}, {"coeffs_ascending", c}});
  }
  return {{"period", qp.period()}, {"degree", qp.degree()}, {"constituents", cs}};
}

QuasiPolynomial qp_from_json(const json& j) {
  const int period = j.at("period").get<int>();
  const auto& cs = j.at("constituents");
  if (period < 1 || static_cast<int>(cs.size()) != period)
    throw ValidationError("constituent count must equal the period");
  std::vector<RationalPolynomial> polys;
  for (int k = 0; k < period; ++k) {
    if (cs[k].at("residue").get<int>() != k + 1)
      throw ValidationError("constituent residues must run 1..period in order");
    polys.push_back(polynomial_from_json(cs[k]));
  }
  return QuasiPolynomial(period, std::move(polys));
}

json system_json(const RootSystem& rs) {
  return {{"family", std::string(1, family_letter(rs.spec().family))},
          {"rank", rs.rank()},
          {"h", rs.coxeter_number()},
          {"f", rs.index_of_connection()},
          {"marks", rs.marks()}};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic quasi-polynomials, Eulerian polynomials and alcove counts"};
  app.name("weylq");
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"info", "root-system data: h, f, marks, #W, positive roots"},
      {"char-quasi", "characteristic quasi-polynomial of a subset (optionally deformed)"},
      {"eulerian", "A-Eulerian polynomial (--variant E|M|generalized)"},
      {"ehrhart", "alcove Ehrhart quasi-polynomial (--variant closed|open)"},
      {"compat", "compatibility decision; --subset ideal-all sweeps every ideal"},
      {"ideals", "all ideals of the root poset"},
      {"deform", "closed formula for a deformed arrangement (--interval lo:hi, once or twice)"},
      {"genfunc", "generating-function comparison to --terms"},
      {"verify", "cross-check compatibility, generating function and deformation"}};

  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--type", o.type, "family letter A..G")->required();
    sub->add_option("--rank", o.rank, "rank")->required();
    sub->add_flag("--json", o.json, "emit JSON");
    sub->add_option("--weyl-cap", o.weyl_cap, "Weyl group enumeration cap");
    if (name == "info" || name == "ehrhart" || name == "ideals") continue;
    sub->add_option("--subset", o.subset, "full | empty | minus:(..) | ideal:(..);(..) | (..),(..)");
    if (name == "char-quasi" || name == "deform" || name == "verify")
      sub->add_option("--interval", o.intervals, "offset interval lo:hi")
          ->allow_extra_args(false)
          ->take_all();
    if (name == "char-quasi") sub->add_option("--period-override", o.period_override, "period");
    if (name == "genfunc" || name == "verify") sub->add_option("--terms", o.terms, "series order");
  }
  for (auto* sub : app.get_subcommands({})) {
    if (sub->get_name() == "eulerian" || sub->get_name() == "ehrhart" ||
        sub->get_name() == "deform")
      sub->add_option("--variant", o.variant, "variant");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Runner runner(app.get_subcommands().front()->get_name(), o, out);
    return runner.run();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace weylq::cli
