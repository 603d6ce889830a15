#include "mukailat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mukailat/binqf.hpp"
#include "mukailat/catalog.hpp"
#include "mukailat/dayform.hpp"
#include "mukailat/matrix_json.hpp"
#include "mukailat/numcond.hpp"
#include "mukailat/planes.hpp"
#include "mukailat/sweep.hpp"
#include "mukailat/vecsearch.hpp"

namespace mukailat::cli {

namespace {

using nlohmann::json;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Integer integer_arg(const std::string& text, const char* what) {
  if (auto x = parse_integer(text)) return *x;
  throw InvalidInput(std::string(what) + " is not an integer: " + text);
}

std::int64_t int64_arg(const std::string& text, const char* what) {
  const Integer x = integer_arg(text, what);
  if (!fits_int64(x)) throw InvalidInput(std::string(what) + " is out of range: " + text);
  return to_int64(x);
}

json form_json(const BinaryQF& q) {
  return json::array({integer_to_json(q.a), integer_to_json(q.b), integer_to_json(q.c)});
}

json point_json(const Point2& p) { return json::array({integer_to_json(p.x), integer_to_json(p.y)}); }

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) out << "  " << vector_text(m.row_vector(i)) << '\n';
  return out.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

IntMatrix load_matrix(const std::string& path, const std::string& inline_text) {
  if (!inline_text.empty()) return parse_matrix(inline_text);
  if (path.empty()) throw InvalidInput("no Gram matrix given (pass a JSON file or --gram)");
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open matrix file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

struct Result {
  Status status = Status::Ok;
  json payload;
  std::string text;
};

Result check_d(const std::string& d_text) {
  const std::int64_t d = int64_arg(d_text, "d");
  if (d < 1) throw InvalidInput("d must be positive");
  const bool star = numcond::satisfies_star(d);
  const bool starstar = numcond::satisfies_starstar(d);
  const auto cert = numcond::a2_certificate(d, d);

  Result r;
  r.payload = {{"d", d}, {"star", star}, {"starstar", starstar}, {"certificate", nullptr}};
  if (cert) r.payload["certificate"] = json::array({cert->x, cert->y});
  r.status = star && starstar ? Status::Ok : Status::NotFound;

  std::ostringstream out;
  out << "d = " << d << '\n'
      << "(*)  d > 6 and d = 0 or 2 mod 6:                 " << yes_no(star) << '\n'
      << "(**) not divisible by 4, 9 or odd p = 2 mod 3:   " << yes_no(starstar) << '\n';
  if (cert) {
    out << "A2 certificate: (" << cert->x << ", " << cert->y << ")  2x^2 - 2xy + 2y^2 = " << d << '\n';
  } else {
    out << "A2 certificate: none (no primitive A2 vector of norm " << d << ")\n";
  }
  r.text = out.str();
  return r;
}

Result day(const std::vector<std::string>& values, const std::string& bound_text) {
  const dayform::DayInstance inst{integer_arg(values[0], "k"), integer_arg(values[1], "l"),
                                  integer_arg(values[2], "m"), integer_arg(values[3], "n")};
  const Integer bound = integer_arg(bound_text, "bound");
  if (sgn(bound) < 0) throw InvalidInput("bound must be nonnegative");

  const auto c = dayform::day_coeffs(inst);
  const bool lemma = dayform::hcf_lemma_check(inst);
  const bool identity = dayform::eisenstein_identity_check(inst);
  const bool definite = is_positive_definite(c.q);

  Result r;
  r.payload = {{"k", integer_to_json(inst.k)},
               {"l", integer_to_json(inst.l)},
               {"m", integer_to_json(inst.m)},
               {"n", integer_to_json(inst.n)},
               {"A", integer_to_json(c.A)},
               {"B", integer_to_json(c.B)},
               {"C", integer_to_json(c.C)},
               {"h", integer_to_json(c.h)},
               {"q", form_json(c.q)},
               {"hcf_lemma", lemma},
               {"eisenstein_identity", identity},
               {"definite", definite},
               {"bound", integer_to_json(bound)},
               {"prime", nullptr},
               {"witness", nullptr}};

  std::ostringstream out;
  out << "Gram:\n" << matrix_text(dayform::day_gram(inst));
  out << "A = " << c.A.get_str() << ", B = " << c.B.get_str() << ", C = " << c.C.get_str()
      << ", h = " << c.h.get_str() << ", q = " << to_string(c.q) << '\n';
  out << "hcf even and (**): " << yes_no(lemma) << ", Eisenstein identities: " << yes_no(identity) << '\n';
  out << "q positive definite: " << yes_no(definite) << '\n';

  r.status = lemma && identity ? Status::Ok : Status::NotFound;
  if (definite) {
    const auto w = dayform::find_prime_1mod3(c.q, bound);
    if (w) {
      r.payload["prime"] = integer_to_json(w->p);
      r.payload["witness"] = json::array({integer_to_json(w->x), integer_to_json(w->y)});
      out << "smallest prime = 1 mod 3: " << w->p.get_str() << " = q(" << w->x.get_str() << ", "
          << w->y.get_str() << ")\n";
    } else {
      r.status = Status::NotFound;
      out << "no prime = 1 mod 3 represented with |x|, |y| <= " << bound.get_str() << '\n';
    }
  } else {
    out << "prime search skipped (q is not positive definite)\n";
  }
  r.text = out.str();
  return r;
}

BinaryQF form_args(const std::vector<std::string>& v) {
  return {integer_arg(v[0], "a"), integer_arg(v[1], "b"), integer_arg(v[2], "c")};
}

void require_definite(const BinaryQF& q) {
  if (!is_positive_definite(q)) throw InvalidInput("form " + to_string(q) + " is not positive definite");
}

Result qf_reduce(const std::vector<std::string>& v) {
  const BinaryQF q = form_args(v);
  require_definite(q);
  const BinaryQF red = reduce(q);
  Result r;
  r.payload = {{"form", form_json(q)}, {"disc", integer_to_json(disc(q))}, {"reduced", form_json(red)}};
  r.text = "reduced form of " + to_string(q) + ": " + to_string(red) + "  (disc " + disc(q).get_str() + ")\n";
  return r;
}

Result qf_min(const std::vector<std::string>& v) {
  const BinaryQF q = form_args(v);
  require_definite(q);
  const Integer m = minimum(q);
  Result r;
  r.payload = {{"form", form_json(q)}, {"minimum", integer_to_json(m)}};
  r.text = "minimum of " + to_string(q) + ": " + m.get_str() + '\n';
  return r;
}

Result qf_represent(const std::vector<std::string>& v) {
  const BinaryQF q = form_args(v);
  const Integer n = integer_arg(v[3], "n");
  require_definite(q);
  if (sgn(n) < 0) throw InvalidInput("n must be nonnegative");
  const auto sols = represent(q, n);
  Result r;
  json arr = json::array();
  std::string text = "solutions of " + to_string(q) + " = " + n.get_str() + ":";
  for (const auto& p : sols) {
    arr.push_back(point_json(p));
    text += " (" + p.x.get_str() + ", " + p.y.get_str() + ")";
  }
  if (sols.empty()) text += " none";
  r.payload = {{"form", form_json(q)}, {"n", integer_to_json(n)}, {"solutions", arr}};
  r.text = text + '\n';
  r.status = sols.empty() ? Status::NotFound : Status::Ok;
  return r;
}

Result qf_prime(const std::vector<std::string>& v, const std::string& bound_text) {
  const BinaryQF q = form_args(v);
  const Integer bound = integer_arg(bound_text, "bound");
  require_definite(q);
  if (!is_primitive(q)) throw InvalidInput("form " + to_string(q) + " is not primitive");
  if (sgn(bound) < 0) throw InvalidInput("bound must be nonnegative");
  const auto w = dayform::find_prime_1mod3(q, bound);
  Result r;
  r.payload = {{"form", form_json(q)}, {"bound", integer_to_json(bound)}, {"prime", nullptr}, {"witness", nullptr}};
  if (w) {
    r.payload["prime"] = integer_to_json(w->p);
    r.payload["witness"] = json::array({integer_to_json(w->x), integer_to_json(w->y)});
    r.text = "smallest prime = 1 mod 3 represented by " + to_string(q) + ": " + w->p.get_str() + " = q(" +
             w->x.get_str() + ", " + w->y.get_str() + ")\n";
  } else {
    r.status = Status::NotFound;
    r.text = "no prime = 1 mod 3 represented with |x|, |y| <= " + bound.get_str() + '\n';
  }
  return r;
}

struct HastReport {
  json payload;
  std::vector<std::string> violations;
};

HastReport hast_report(const planes::HastInstance& inst, std::int64_t bound) {
  const IntMatrix gram = planes::hast_gram(inst);
  const Integer determinant = det(gram);
  const Integer d = planes::disc_h2T(inst);
  const BinaryQF form = planes::restricted_form(inst);
  const Integer min = minimum(form);
  const auto classes = planes::plane_classes(inst, bound);
  const bool shape = std::all_of(classes.begin(), classes.end(), [](const planes::Coords& c) {
    return sgn(c[2]) == 0 && abs(c[1]) == 1;
  });
  const bool excluded = represent(form, 2).empty() && represent(form, 6).empty();

  HastReport rep;
  const std::string tag = "k=" + std::to_string(inst.k()) + " " + planes::to_string(inst.variant()) + ": ";
  if (determinant != inst.n()) rep.violations.push_back(tag + "det != n");
  if (d != inst.target_d()) rep.violations.push_back(tag + "disc<h^2,T> != target d");
  if (min != 8) rep.violations.push_back(tag + "restricted form minimum != 8");
  if (!shape) rep.violations.push_back(tag + "plane class outside (x, +-1, 0)");
  if (static_cast<std::int64_t>(classes.size()) != 2 * (2 * bound + 1)) {
    rep.violations.push_back(tag + "plane class count differs from 2(2 bound + 1)");
  }
  if (!excluded) rep.violations.push_back(tag + "restricted form represents 2 or 6");

  json class_list = json::array();
  for (const auto& c : classes) class_list.push_back(vector_to_json(Vector(c.begin(), c.end())));
  rep.payload = {{"k", inst.k()},
                 {"variant", planes::to_string(inst.variant())},
                 {"gram", matrix_to_json(gram)},
                 {"n", integer_to_json(inst.n())},
                 {"det", integer_to_json(determinant)},
                 {"d", integer_to_json(d)},
                 {"restricted_form", form_json(form)},
                 {"minimum", integer_to_json(min)},
                 {"represents_2_or_6", !excluded},
                 {"plane_classes", {{"bound", bound}, {"count", classes.size()}, {"shape_ok", shape},
                                    {"classes", class_list}}}};
  return rep;
}

Result hast(const std::string& k_text, const std::string& variant_text, const std::string& bound_text,
            const std::string& sweep_text) {
  const std::int64_t bound = int64_arg(bound_text, "bound");
  if (bound < 0) throw InvalidInput("bound must be nonnegative");
  Result r;
  if (!sweep_text.empty()) {
    const std::int64_t top = int64_arg(sweep_text, "sweep");
    if (top < 2) throw InvalidInput("--sweep needs K >= 2");
    std::vector<std::string> violations;
    std::int64_t checked = 0;
    for (std::int64_t k = 2; k <= top; ++k) {
      for (auto v : {planes::HastVariant::N16kMinus3, planes::HastVariant::N16kPlus5}) {
        auto rep = hast_report(planes::HastInstance(k, v), bound);
        ++checked;
        violations.insert(violations.end(), rep.violations.begin(), rep.violations.end());
      }
    }
    r.payload = {{"sweep", top}, {"bound", bound}, {"checked", checked}, {"violations", violations}};
    std::ostringstream out;
    out << "checked " << checked << " instances (k = 2.." << top << ", both variants), violations: "
        << violations.size() << '\n';
    for (const auto& v : violations) out << "  " << v << '\n';
    r.text = out.str();
    r.status = violations.empty() ? Status::Ok : Status::NotFound;
    return r;
  }

  if (k_text.empty() || variant_text.empty()) throw InvalidInput("hast needs <k> <variant> or --sweep K");
  const planes::HastInstance inst(int64_arg(k_text, "k"), planes::parse_variant(variant_text));
  auto rep = hast_report(inst, bound);
  r.payload = rep.payload;
  r.payload["violations"] = rep.violations;
  r.status = rep.violations.empty() ? Status::Ok : Status::NotFound;

  std::ostringstream out;
  out << "Gram of (h^2, Q, T):\n" << matrix_text(planes::hast_gram(inst));
  out << "n = " << inst.n().get_str() << " (det " << rep.payload["det"].dump() << "), d = disc<h^2,T> = "
      << rep.payload["d"].dump() << '\n';
  const BinaryQF form = planes::restricted_form(inst);
  out << "restricted discriminant form in (y, z): " << to_string(form) << ", minimum "
      << rep.payload["minimum"].dump() << '\n';
  out << "represents 2 or 6: " << yes_no(rep.payload["represents_2_or_6"].get<bool>()) << '\n';
  out << "plane classes with |coords| <= " << bound << ": " << rep.payload["plane_classes"]["count"].dump()
      << " (all of shape (x, +-1, 0): " << yes_no(rep.payload["plane_classes"]["shape_ok"].get<bool>()) << ")\n";
  for (const auto& v : rep.violations) out << "VIOLATION " << v << '\n';
  r.text = out.str();
  return r;
}

Result search(const std::string& path, const std::string& gram_text, const std::string& target_text,
              const std::string& bound_text) {
  vecsearch::SearchRequest req;
  req.lattice = Lattice(load_matrix(path, gram_text));
  req.bound = int64_arg(bound_text, "bound");
  if (req.bound < 1) throw InvalidInput("bound must be at least 1");
  req.target = vecsearch::Target::parse(target_text);
  const auto found = vecsearch::run(req);

  Result r;
  json vectors = json::array();
  for (const auto& v : found.vectors) vectors.push_back(vector_to_json(v));
  r.payload = {{"target", req.target.name()}, {"bound", req.bound}, {"found", found.found}, {"vectors", vectors}};
  std::ostringstream out;
  out << "target " << req.target.name() << ", bound " << req.bound << ": ";
  if (!found.found) {
    out << "none within bound\n";
  } else {
    out << found.vectors.size() << " vector(s)\n";
    for (const auto& v : found.vectors) out << "  " << vector_text(v) << '\n';
  }
  const bool is_pair = req.target.kind == vecsearch::TargetKind::HyperbolicPair ||
                       req.target.kind == vecsearch::TargetKind::MinusA2Pair;
  if (found.found && is_pair) {
    const IntMatrix g = Sublattice(req.lattice, IntMatrix::from_rows(found.vectors)).induced_gram();
    r.payload["pair_gram"] = matrix_to_json(g);
    out << "Gram of the pair:\n" << matrix_text(g);
  }
  r.text = out.str();
  r.status = found.found ? Status::Ok : Status::NotFound;
  return r;
}

Result lattice_make(const std::string& name) {
  Result r;
  const Lattice l = catalog::make(catalog::parse_name(name));
  r.payload = matrix_to_json(l.gram());
  r.text = r.payload.dump() + '\n';
  return r;
}

Result lattice_info(const std::string& path, const std::string& gram_text) {
  const Lattice l(load_matrix(path, gram_text));
  const Signature s = signature(l);
  json snf_json = json::array();
  for (const auto& d : snf(l.gram())) snf_json.push_back(integer_to_json(d));
  Result r;
  r.payload = {{"rank", l.rank()},
               {"det", integer_to_json(l.discriminant())},
               {"signature", json::array({s.positive, s.negative, s.zero})},
               {"even", l.is_even()},
               {"unimodular", l.is_unimodular()},
               {"snf", snf_json}};
  std::ostringstream out;
  out << "rank " << l.rank() << ", det " << l.discriminant().get_str() << ", signature (" << s.positive << ", "
      << s.negative << ", " << s.zero << "), even: " << yes_no(l.is_even())
      << ", unimodular: " << yes_no(l.is_unimodular()) << '\n';
  if (l.is_nondegenerate()) {
    json factors = json::array();
    out << "discriminant group:";
    const auto group = discriminant_group(l);
    for (const auto& d : group.invariant_factors) {
      factors.push_back(integer_to_json(d));
      out << " Z/" << d.get_str();
    }
    if (group.invariant_factors.empty()) out << " trivial";
    out << '\n';
    r.payload["discriminant_group"] = factors;
  }
  r.text = out.str();
  return r;
}

Result run_sweep(const std::vector<int>& ids, bool list) {
  Result r;
  if (list) {
    json arr = json::array();
    std::ostringstream out;
    for (const auto& s : sweep::suites()) {
      arr.push_back({{"id", s.id}, {"name", s.name}});
      out << s.id << '\t' << s.name << '\n';
    }
    r.payload = {{"suites", arr}};
    r.text = out.str();
    return r;
  }
  std::vector<sweep::SuiteResult> results;
  try {
    results = sweep::run(ids, sweep::threads_from_env());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  json arr = json::array();
  bool all = true;
  std::ostringstream out;
  for (const auto& s : results) {
    all = all && s.passed;
    arr.push_back({{"id", s.id}, {"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
    out << (s.passed ? "PASS " : "FAIL ") << '[' << s.id << "] " << s.name << ": " << s.detail << '\n';
  }
  r.payload = {{"suites", arr}, {"passed", all}};
  r.text = out.str();
  r.status = all ? Status::Ok : Status::NotFound;
  return r;
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact integral-lattice and binary-quadratic-form verification toolkit", "mukailat"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "Emit the machine-readable JSON payload");

  std::string d_text;
  auto* check = app.add_subcommand("check-d", "Test conditions (*) and (**) and find an A2 certificate");
  check->add_option("d", d_text, "Discriminant label d >= 1")->required();

  std::vector<std::string> day_values;
  std::string day_bound = "50";
  auto* day_cmd = app.add_subcommand("day", "Rank-4 Euler pairing analysis for pairings k l m n");
  day_cmd->add_option("pairings", day_values, "k l m n: pairings l1.k1, l2.k1, l1.k2, l2.k2")->expected(4)->required();
  day_cmd->add_option("--bound", day_bound, "Coordinate bound for the prime search");

  auto* qf = app.add_subcommand("qf", "Binary quadratic form tools");
  qf->require_subcommand(1);
  std::vector<std::string> qf_values;
  std::string qf_bound = "50";
  auto* qf_reduce_cmd = qf->add_subcommand("reduce", "Gauss-reduce a positive definite form");
  qf_reduce_cmd->add_option("form", qf_values, "a b c")->expected(3)->required();
  auto* qf_min_cmd = qf->add_subcommand("min", "Minimum of a positive definite form");
  qf_min_cmd->add_option("form", qf_values, "a b c")->expected(3)->required();
  auto* qf_rep_cmd = qf->add_subcommand("represent", "All solutions of q(x, y) = n");
  qf_rep_cmd->add_option("form", qf_values, "a b c n")->expected(4)->required();
  auto* qf_prime_cmd = qf->add_subcommand("prime", "Smallest represented prime = 1 (mod 3)");
  qf_prime_cmd->add_option("form", qf_values, "a b c")->expected(3)->required();
  qf_prime_cmd->add_option("--bound", qf_bound, "Coordinate bound");

  std::string hast_k, hast_variant, hast_bound = "3", hast_sweep;
  auto* hast_cmd = app.add_subcommand("hast", "Gram data on <h^2, Q, T> and plane classes");
  hast_cmd->add_option("k", hast_k, "k >= 2");
  hast_cmd->add_option("variant", hast_variant, "16k-3 or 16k+5");
  hast_cmd->add_option("--bound", hast_bound, "Coordinate bound for the plane-class census");
  hast_cmd->add_option("--sweep", hast_sweep, "Check k = 2..K for both variants");

  std::string search_path, search_gram, search_target, search_bound = "3";
  auto* search_cmd = app.add_subcommand("search", "Bounded search for vectors and pairs in a lattice");
  search_cmd->add_option("file", search_path, "Gram matrix JSON file");
  search_cmd->add_option("--gram", search_gram, "Inline Gram matrix JSON");
  search_cmd->add_option("--target", search_target, "u-pair | a2-pair | isotropic | norm:<n>")->required();
  search_cmd->add_option("--bound", search_bound, "Maximum |coordinate|");

  auto* lattice_cmd = app.add_subcommand("lattice", "Named lattices and invariants");
  lattice_cmd->require_subcommand(1);
  std::string lattice_name, lattice_path, lattice_gram;
  auto* make_cmd = lattice_cmd->add_subcommand("make", "Emit the Gram matrix of a named lattice");
  make_cmd->add_option("name", lattice_name, "U | A2 | MinusA2 | E8 | Mukai")->required();
  auto* info_cmd = lattice_cmd->add_subcommand("info", "Determinant, signature and discriminant group");
  info_cmd->add_option("file", lattice_path, "Gram matrix JSON file");
  info_cmd->add_option("--gram", lattice_gram, "Inline Gram matrix JSON");

  std::vector<int> sweep_ids;
  bool sweep_all = false;
  bool sweep_list = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the exhaustive verification suites");
  sweep_cmd->add_flag("--all", sweep_all, "Run every suite (the default)");
  sweep_cmd->add_flag("--list", sweep_list, "List suite ids");
  sweep_cmd->add_option("ids", sweep_ids, "Suite ids to run");

  CommandOutcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    outcome.output = out.str();
    outcome.error = err.str();
    outcome.status = code == 0 ? Status::Ok : Status::InvalidInput;
    return outcome;
  }

  auto fail = [&](const std::string& message) {
    outcome.status = Status::InvalidInput;
    outcome.payload = {{"error", message}};
    outcome.error = "error: " + message + '\n';
    if (json_out) outcome.output = outcome.payload.dump(2) + '\n';
    return outcome;
  };

  Result r;
  try {
    if (check->parsed()) {
      r = check_d(d_text);
    } else if (day_cmd->parsed()) {
      r = day(day_values, day_bound);
    } else if (qf_reduce_cmd->parsed()) {
      r = qf_reduce(qf_values);
    } else if (qf_min_cmd->parsed()) {
      r = qf_min(qf_values);
    } else if (qf_rep_cmd->parsed()) {
      r = qf_represent(qf_values);
    } else if (qf_prime_cmd->parsed()) {
      r = qf_prime(qf_values, qf_bound);
    } else if (hast_cmd->parsed()) {
      r = hast(hast_k, hast_variant, hast_bound, hast_sweep);
    } else if (search_cmd->parsed()) {
      r = search(search_path, search_gram, search_target, search_bound);
    } else if (make_cmd->parsed()) {
      r = lattice_make(lattice_name);
    } else if (info_cmd->parsed()) {
      r = lattice_info(lattice_path, lattice_gram);
    } else if (sweep_cmd->parsed()) {
      r = run_sweep(sweep_all ? std::vector<int>{} : sweep_ids, sweep_list);
    }
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  } catch (const std::domain_error& e) {
    return fail(e.what());
  } catch (const std::exception& e) {
    return fail(std::string("internal error: ") + e.what());
  }

  outcome.status = r.status;
  outcome.payload = r.payload;
  outcome.output = json_out ? r.payload.dump(2) + '\n' : r.text;
  return outcome;
}

}  // namespace mukailat::cli
