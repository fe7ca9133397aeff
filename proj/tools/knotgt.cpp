// Command-line surface for the knotgt library.  Machine output is a single
// canonical JSON document on stdout; human-readable run summaries go to
// stderr.  Exit codes: 0 success, 1 verification failure, 2 usage or input
// error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotgt/ball.hpp"
#include "knotgt/sclbounds.hpp"
#include "knotgt/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using knotgt::Int;
using knotgt::Rational;
namespace seifert = knotgt::seifert;
namespace torsion = knotgt::torsion;
namespace sclbounds = knotgt::sclbounds;
namespace jsj = knotgt::jsj;

json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) {
    return v.convert_to<long long>();
  }
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string rational_text(const Rational& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) {
    out << '/' << boost::multiprecision::denominator(r);
  }
  return out.str();
}

seifert::GroupSpec parse_group(const std::string& text) {
  std::size_t colon = text.find(':');
  std::size_t comma = text.find(',', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || comma == std::string::npos || comma < colon) {
    throw knotgt::InvalidArgument("group syntax is torus:p,q or cable:p,q, got '" + text + "'");
  }
  std::string kind = text.substr(0, colon);
  Int p;
  Int q;
  try {
    p = Int(text.substr(colon + 1, comma - colon - 1));
    q = Int(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw knotgt::InvalidArgument("group parameters must be integers: '" + text + "'");
  }
  if (kind == "torus") {
    return seifert::make_group(seifert::GroupKind::TorusKnot, p, q);
  }
  if (kind == "cable") {
    return seifert::make_group(seifert::GroupKind::Cable, p, q);
  }
  throw knotgt::InvalidArgument("unknown group kind '" + kind + "' (expected torus or cable)");
}

json abelian_json(const seifert::AbelianImage& ab) {
  json out = json::array();
  out.push_back(json_int(ab.first));
  if (ab.kind == seifert::GroupKind::Cable) {
    out.push_back(json_int(ab.second));
  }
  return out;
}

json certificate_json(const torsion::TorsionCertificate& cert) {
  json out;
  if (const auto* two = std::get_if<torsion::OrderTwo>(&cert)) {
    out["kind"] = "order_two";
    out["element"] = seifert::to_text(two->element);
    out["conjugator"] = seifert::to_text(two->conjugator);
    return out;
  }
  if (const auto* found = std::get_if<torsion::OrderFound>(&cert)) {
    out["kind"] = "order_found";
    out["order"] = found->order;
    json xs = json::array();
    for (const seifert::Element& x : found->conjugators) {
      xs.push_back(seifert::to_text(x));
    }
    out["conjugators"] = std::move(xs);
    return out;
  }
  if (const auto* nf = std::get_if<torsion::NotFoundWithinBounds>(&cert)) {
    out["kind"] = "not_found_within_bounds";
    out["max_order"] = nf->bounds.max_order;
    out["radius"] = nf->bounds.radius;
    return out;
  }
  const auto& obstructed = std::get<torsion::Obstructed>(cert);
  out["kind"] = "obstructed";
  out["abelianization"] = abelian_json(obstructed.abelianization);
  return out;
}

struct Invocation {
  std::string command;
  json inputs = json::object();
  std::uint64_t seed = 0;
};

int emit(const Invocation& run, const json& result, int exit_code,
         std::chrono::steady_clock::time_point started) {
  std::cout << result.dump(2) << "\n";
  auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "knotgt " << run.command << " inputs=" << run.inputs.dump()
            << " seed=" << run.seed << " time=" << static_cast<double>(elapsed) / 1000.0
            << "ms\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact word, conjugacy, torsion-order and scl computations in torus knot and cable space groups"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();

  std::string group_text;
  std::string word_text;
  std::string word2_text;
  std::string x_text;
  std::string y_text;
  long long m_value = 0;
  long long n_value = 0;
  long long root_degree = 2;
  int radius = 2;
  int max_order = 4;
  std::string jsj_path;

  CLI::App* normalize = app.add_subcommand("normalize", "normal form of a generator word");
  normalize->add_option("--group", group_text, "torus:p,q or cable:p,q")->required();
  normalize->add_option("--word", word_text, "generator word")->required();

  CLI::App* equal = app.add_subcommand("equal", "decide equality of two generator words");
  equal->add_option("--group", group_text)->required();
  equal->add_option("word", word_text, "first word")->required();
  equal->add_option("word2", word2_text, "second word")->required();

  CLI::App* conj = app.add_subcommand("conj", "decide conjugacy; prints a verified conjugator");
  conj->add_option("--group", group_text)->required();
  conj->add_option("word", word_text, "first word")->required();
  conj->add_option("word2", word2_text, "second word")->required();

  CLI::App* gentorsion =
      app.add_subcommand("gentorsion", "generalized-torsion order search with certificates");
  gentorsion->add_option("--group", group_text)->required();
  gentorsion->add_option("--word", word_text)->required();
  gentorsion->add_option("--max-order", max_order, "largest number of conjugates tried")
      ->capture_default_str();
  gentorsion->add_option("--radius", radius, "conjugator generator-word length bound")
      ->capture_default_str();

  CLI::App* roots = app.add_subcommand("roots", "solve x^n = g");
  roots->add_option("--group", group_text)->required();
  roots->add_option("--word", word_text)->required();
  roots->add_option("--n", root_degree, "root degree")->required();
  roots->add_option("--radius", radius, "conjugating-word bound for central targets")
      ->capture_default_str();

  CLI::App* scl = app.add_subcommand("scl", "exact rational scl interval");
  scl->add_option("--group", group_text)->required();
  scl->add_option("--word", word_text)->required();
  scl->add_option("--max-order", max_order)->capture_default_str();
  scl->add_option("--radius", radius)->capture_default_str();

  CLI::App* bs = app.add_subcommand("bs", "check the relation x^-1 y^m x = y^n");
  bs->add_option("--group", group_text)->required();
  bs->add_option("--x", x_text)->required();
  bs->add_option("--y", y_text)->required();
  bs->add_option("--m", m_value)->required();
  bs->add_option("--n", n_value)->required();

  CLI::App* classify = app.add_subcommand("classify", "classify a JSJ description");
  classify->add_option("--jsj", jsj_path, "path to a .jsj file")->required();

  CLI::App* verify_paper = app.add_subcommand(
      "verify-paper", "run the built-in golden suite; nonzero exit on any failure");

  // Parent options (--seed) may follow the subcommand on the command line.
  for (CLI::App* sub : {normalize, equal, conj, gentorsion, roots, scl, bs, classify,
                        verify_paper}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  Invocation run;
  run.seed = seed;

  try {
    if (normalize->parsed()) {
      run.command = "normalize";
      run.inputs = {{"group", group_text}, {"word", word_text}};
      seifert::GroupSpec spec = parse_group(group_text);
      seifert::Element g = seifert::parse_element(spec, word_text);
      json result;
      result["central"] = json_int(g.central());
      result["word"] = seifert::word_text(g);
      return emit(run, result, 0, started);
    }

    if (equal->parsed()) {
      run.command = "equal";
      run.inputs = {{"group", group_text}, {"word", word_text}, {"word2", word2_text}};
      seifert::GroupSpec spec = parse_group(group_text);
      json result;
      result["equal"] = seifert::equals(seifert::parse_element(spec, word_text),
                                        seifert::parse_element(spec, word2_text));
      return emit(run, result, 0, started);
    }

    if (conj->parsed()) {
      run.command = "conj";
      run.inputs = {{"group", group_text}, {"word", word_text}, {"word2", word2_text}};
      seifert::GroupSpec spec = parse_group(group_text);
      auto witness = seifert::are_conjugate(seifert::parse_element(spec, word_text),
                                            seifert::parse_element(spec, word2_text));
      json result;
      result["conjugate"] = witness.has_value();
      result["conjugator"] = witness ? json(seifert::to_text(*witness)) : json(nullptr);
      return emit(run, result, 0, started);
    }

    if (gentorsion->parsed()) {
      run.command = "gentorsion";
      run.inputs = {{"group", group_text},
                    {"word", word_text},
                    {"max_order", max_order},
                    {"radius", radius}};
      seifert::GroupSpec spec = parse_group(group_text);
      seifert::Element g = seifert::parse_element(spec, word_text);
      auto cert = torsion::gt_order_search(g, torsion::SearchBounds{radius, max_order});
      json result;
      result["certificate"] = certificate_json(cert);
      result["verified"] = torsion::verify_certificate(g, cert);
      return emit(run, result, 0, started);
    }

    if (roots->parsed()) {
      run.command = "roots";
      run.inputs = {{"group", group_text},
                    {"word", word_text},
                    {"n", root_degree},
                    {"radius", radius}};
      seifert::GroupSpec spec = parse_group(group_text);
      seifert::Element g = seifert::parse_element(spec, word_text);
      json list = json::array();
      for (const seifert::Element& x : torsion::roots_search(g, root_degree, radius)) {
        list.push_back(seifert::to_text(x));
      }
      json result;
      result["count"] = list.size();
      result["roots"] = std::move(list);
      return emit(run, result, 0, started);
    }

    if (scl->parsed()) {
      run.command = "scl";
      run.inputs = {{"group", group_text},
                    {"word", word_text},
                    {"max_order", max_order},
                    {"radius", radius}};
      seifert::GroupSpec spec = parse_group(group_text);
      seifert::Element g = seifert::parse_element(spec, word_text);
      sclbounds::SclInterval interval =
          sclbounds::scl_interval(g, torsion::SearchBounds{radius, max_order});
      json result;
      result["lower"] = rational_text(interval.lower);
      result["upper"] = interval.upper ? json(rational_text(*interval.upper)) : json("inf");
      result["lower_note"] = interval.lower_note;
      result["upper_note"] = interval.upper_note;
      return emit(run, result, 0, started);
    }

    if (bs->parsed()) {
      run.command = "bs";
      run.inputs = {{"group", group_text},
                    {"x", x_text},
                    {"y", y_text},
                    {"m", m_value},
                    {"n", n_value}};
      seifert::GroupSpec spec = parse_group(group_text);
      json result;
      result["holds"] = torsion::bs_check(seifert::parse_element(spec, x_text),
                                          seifert::parse_element(spec, y_text), m_value, n_value);
      return emit(run, result, 0, started);
    }

    if (classify->parsed()) {
      run.command = "classify";
      run.inputs = {{"jsj", jsj_path}};
      std::ifstream in(jsj_path);
      if (!in) {
        throw knotgt::InvalidArgument("cannot open JSJ file '" + jsj_path + "'");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      jsj::JsjTree tree = jsj::parse_jsj(buffer.str());
      jsj::Classification cls = jsj::classify(tree);
      // classification_json is the canonical byte-stable rendering.
      std::cout << jsj::classification_json(tree, cls);
      auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
      std::cerr << "knotgt classify inputs=" << run.inputs.dump() << " seed=" << run.seed
                << " time=" << static_cast<double>(elapsed) / 1000.0 << "ms\n";
      return 0;
    }

    if (verify_paper->parsed()) {
      run.command = "verify-paper";
      knotgt::verify::Report report = knotgt::verify::run_paper_suite(seed);
      json criteria = json::array();
      for (const auto& cr : report.criteria) {
        std::cerr << (cr.passed ? "[PASS] " : "[FAIL] ") << cr.id << ": " << cr.name << " ("
                  << cr.detail << ")\n";
        json entry;
        entry["id"] = cr.id;
        entry["name"] = cr.name;
        entry["passed"] = cr.passed;
        entry["detail"] = cr.detail;
        criteria.push_back(std::move(entry));
      }
      json result;
      result["passed"] = report.all_passed();
      result["seed"] = seed;
      result["criteria"] = std::move(criteria);
      return emit(run, result, report.all_passed() ? 0 : 1, started);
    }
  } catch (const knotgt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cerr << "error: no subcommand selected\n";
  return 2;
}
