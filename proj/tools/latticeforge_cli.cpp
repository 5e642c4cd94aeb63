#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latticeforge/catalog.hpp"
#include "latticeforge/definite.hpp"
#include "latticeforge/discform.hpp"
#include "latticeforge/embeddings.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/json_io.hpp"
#include "latticeforge/nikulin.hpp"
#include "latticeforge/snf.hpp"

namespace {

using lf::Json;

lf::Int max_group_order() {
  if (const char* env = std::getenv("LATTICEFORGE_MAX_GROUP")) {
    try {
      lf::Int v(env);
      if (v > 0) return v;
    } catch (const std::invalid_argument&) {
      lf::fail("BadParameter", "LATTICEFORGE_MAX_GROUP is not an integer");
    }
    lf::fail("BadParameter", "LATTICEFORGE_MAX_GROUP must be positive");
  }
  return lf::kDefaultMaxGroupOrder;
}

lf::IntegerLattice load_lattice(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) lf::fail("BadParameter", "cannot open " + arg.substr(1));
    Json j;
    try {
      in >> j;
    } catch (const Json::parse_error& e) {
      lf::fail("SyntaxError", std::string("invalid JSON: ") + e.what());
    }
    return lf::lattice_from_json(j);
  }
  return lf::lattice_from_expression(arg);
}

lf::RatVec parse_rational_row(const std::string& text, lf::Index expect) {
  std::vector<lf::Rat> vals;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    // trim spaces
    size_t a = piece.find_first_not_of(" \t");
    size_t b = piece.find_last_not_of(" \t");
    if (a == std::string::npos) lf::fail("SyntaxError", "empty entry in vector: " + text);
    vals.push_back(lf::rat_from_string(piece.substr(a, b - a + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<lf::Index>(vals.size()) != expect) {
    lf::fail("DimensionMismatch", "vector must have " + std::to_string(expect) + " entries");
  }
  lf::RatVec out(expect);
  for (lf::Index i = 0; i < expect; ++i) out(i) = vals[static_cast<size_t>(i)];
  return out;
}

void emit(const Json& payload) {
  Json doc;
  doc["status"] = "ok";
  for (auto& [key, value] : payload.items()) doc[key] = value;
  std::cout << doc.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integral lattice toolkit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string lattice_arg, other_arg, bound_arg = "2", d_arg, p_arg = "2";
  std::vector<std::string> gen_args, row_args;
  int tplus = 0, tminus = 0, ell = 0, delta = 0, rho = 0;
  bool explain = false;

  auto* c_inv = app.add_subcommand("invariants", "Rank, signature, determinant, parity");
  c_inv->add_option("lattice", lattice_arg)->required();

  auto* c_disc = app.add_subcommand("discform", "Discriminant group and quadratic form");
  c_disc->add_option("lattice", lattice_arg)->required();

  auto* c_classify = app.add_subcommand("classify", "Transcendental-lattice classification");
  c_classify->add_option("lattice", lattice_arg)->required();
  c_classify->add_flag("--explain", explain);

  auto* c_exists = app.add_subcommand("exists-2elem", "2-elementary existence test");
  c_exists->add_option("--tplus", tplus)->required();
  c_exists->add_option("--tminus", tminus)->required();
  c_exists->add_option("--l", ell)->required();
  c_exists->add_option("--delta", delta)->required();

  app.add_subcommand("enumerate", "Sweep rho in 1..10, delta in {0,1}");

  auto* c_kappa = app.add_subcommand("kappa", "2^rho / d as an exact rational");
  c_kappa->add_option("--rho", rho)->required();
  c_kappa->add_option("--d", d_arg)->required();

  auto* c_hassett = app.add_subcommand("hassett", "Rank-1 discriminant criterion");
  c_hassett->add_option("--d", d_arg)->required();

  auto* c_short = app.add_subcommand("shortvec", "Short vector census");
  c_short->add_option("lattice", lattice_arg)->required();
  c_short->add_option("--bound", bound_arg)->required();

  auto* c_glue = app.add_subcommand("glue", "Overlattice from glue vectors");
  c_glue->add_option("lattice", lattice_arg)->required();
  c_glue->add_option("--gen", gen_args, "Glue vector, comma-separated rationals");

  auto* c_comp = app.add_subcommand("complement", "Orthogonal complement of a sublattice");
  c_comp->add_option("lattice", lattice_arg)->required();
  c_comp->add_option("--row", row_args, "Sublattice vector, comma-separated integers")
      ->required();

  auto* c_iso = app.add_subcommand("isometry", "Isometry test for definite lattices (rank <= 8)");
  c_iso->add_option("first", lattice_arg)->required();
  c_iso->add_option("second", other_arg)->required();

  auto* c_orth = app.add_subcommand("orthgroup", "Orthogonal group order of the p-primary part");
  c_orth->add_option("lattice", lattice_arg)->required();
  c_orth->add_option("--p", p_arg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e, std::cerr, std::cerr);
    return 2;
  }

  try {
    if (c_inv->parsed()) {
      lf::IntegerLattice l = load_lattice(lattice_arg);
      lf::Signature sig = lf::signature(l);
      Json out;
      out["rank"] = static_cast<std::int64_t>(l.rank());
      out["signature"] = Json::array({sig.plus, sig.minus});
      out["det"] = lf::determinant(l).get_str();
      out["even"] = l.is_even();
      Json factors = Json::array();
      if (l.is_nondegenerate()) {
        for (const lf::Int& f : lf::discriminant_group(l).invariant_factors) {
          factors.push_back(f.get_str());
        }
      }
      out["discriminant_group"] = std::move(factors);
      emit(out);
    } else if (c_disc->parsed()) {
      emit(lf::form_to_json(lf::discriminant_form(load_lattice(lattice_arg))));
    } else if (c_classify->parsed()) {
      emit(lf::report_to_json(lf::classify(load_lattice(lattice_arg)), explain));
    } else if (c_exists->parsed()) {
      Json out;
      out["exists"] = lf::two_elementary_exists({tplus, tminus, ell, delta});
      emit(out);
    } else if (app.get_subcommand("enumerate")->parsed()) {
      lf::EnumerationResult r = lf::enumerate_2elem_candidates();
      Json out;
      Json cands = Json::array();
      for (auto [rr, dd] : r.candidates) cands.push_back(Json::array({rr, dd}));
      out["candidates"] = std::move(cands);
      out["delta0_t_exists"] = r.delta0_t_exists;
      out["delta0_m_exists"] = r.delta0_m_exists;
      emit(out);
    } else if (c_kappa->parsed()) {
      Json out;
      out["kappa"] = lf::rat_to_string(lf::kappa(rho, lf::Int(d_arg)));
      emit(out);
    } else if (c_hassett->parsed()) {
      Json out;
      out["potentially_irrational"] = lf::hassett_rho1(lf::Int(d_arg));
      emit(out);
    } else if (c_short->parsed()) {
      lf::ShortVectorReport r = lf::short_vectors(load_lattice(lattice_arg), lf::Int(bound_arg));
      Json counts = Json::object();
      for (const auto& [norm, count] : r.counts) counts[norm.get_str()] = count.get_str();
      Json out;
      out["bound"] = r.bound.get_str();
      out["minimum"] = r.minimum.get_str();
      out["counts"] = std::move(counts);
      out["total"] = r.total().get_str();
      emit(out);
    } else if (c_glue->parsed()) {
      lf::IntegerLattice base = load_lattice(lattice_arg);
      lf::RatMat gens(static_cast<lf::Index>(gen_args.size()), base.rank());
      for (size_t i = 0; i < gen_args.size(); ++i) {
        gens.row(static_cast<lf::Index>(i)) =
            parse_rational_row(gen_args[i], base.rank()).transpose();
      }
      lf::IntegerLattice result = lf::overlattice({base, gens});
      Json out = lf::lattice_to_json(result);
      out["det"] = lf::determinant(result).get_str();
      out["even"] = result.is_even();
      emit(out);
    } else if (c_comp->parsed()) {
      lf::IntegerLattice ambient = load_lattice(lattice_arg);
      lf::IntMat basis(static_cast<lf::Index>(row_args.size()), ambient.rank());
      for (size_t i = 0; i < row_args.size(); ++i) {
        lf::RatVec row = parse_rational_row(row_args[i], ambient.rank());
        for (lf::Index j = 0; j < ambient.rank(); ++j) {
          if (row(j).get_den() != 1) {
            lf::fail("SyntaxError", "sublattice vectors must be integral");
          }
          basis(static_cast<lf::Index>(i), j) = lf::Int(row(j).get_num());
        }
      }
      lf::IntegerLattice result = lf::orthogonal_complement({ambient, basis});
      Json out = lf::lattice_to_json(result);
      out["rank"] = static_cast<std::int64_t>(result.rank());
      out["det"] = lf::determinant(result).get_str();
      emit(out);
    } else if (c_iso->parsed()) {
      Json out;
      out["isometric"] = lf::isometric_small(load_lattice(lattice_arg), load_lattice(other_arg));
      emit(out);
    } else if (c_orth->parsed()) {
      lf::FiniteQuadraticForm q = lf::discriminant_form(load_lattice(lattice_arg));
      lf::FiniteQuadraticForm part = lf::p_primary_part(q, lf::Int(p_arg));
      if (part.group_order() > max_group_order()) {
        lf::fail("GroupTooLarge", "group order exceeds LATTICEFORGE_MAX_GROUP");
      }
      Json out;
      out["order"] = lf::orthogonal_group_order(part).get_str();
      emit(out);
    }
  } catch (const lf::Error& e) {
    Json doc;
    doc["status"] = "error";
    doc["code"] = e.code();
    doc["message"] = e.what();
    std::cout << doc.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json doc;
    doc["status"] = "error";
    doc["code"] = "Internal";
    doc["message"] = e.what();
    std::cout << doc.dump() << "\n";
    return 1;
  }
  return 0;
}
