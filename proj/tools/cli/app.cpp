// Copyright 2026 The sunitary Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "matrix_io.hpp"
#include "sunitary/sunitary.hpp"

namespace sunitary::cli {

using nlohmann::ordered_json;

namespace {

// State shared by one invocation: tolerances, loaded inputs, the report.
struct Context {
  Tolerances tol;
  bool json_output = false;
  std::string command;
  ordered_json inputs = ordered_json::array();
  ordered_json verdict = ordered_json::object();

  const LoadedFile& load(const std::string& role, const std::string& path) {
    files.push_back(load_json_file(path));
    ordered_json entry;
    entry["role"] = role;
    entry["path"] = path;
    entry["sha256"] = files.back().sha256;
    inputs.push_back(std::move(entry));
    return files.back();
  }
  CMatrix matrix(const std::string& role, const std::string& path) {
    return matrix_from_json(load(role, path).document, path);
  }
  MapRep map(const std::string& role, const std::string& path) {
    return map_from_json(load(role, path).document, path);
  }
  KrausSet kraus(const std::string& role, const std::string& path) {
    return kraus_set_from_json(load(role, path).document, path);
  }

  ordered_json tolerances() const {
    ordered_json t;
    t["residual"] = tol.residual;
    t["rank_cutoff"] = tol.rank_cutoff;
    return t;
  }

 private:
  std::vector<LoadedFile> files;
};

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["holds"] = v.holds;
  j["residual"] = v.residual;
  j["threshold"] = v.threshold;
  return j;
}

int exit_for(bool holds) { return holds ? kVerdictTrue : kVerdictFalse; }

void require_square_input(const CMatrix& X, const std::string& role) {
  if (X.rows() != X.cols()) {
    throw DimensionError(role + " must be square");
  }
}

// ---- human-readable rendering ------------------------------------------

bool is_matrix(const ordered_json& j) {
  return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("data");
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string format_complex(double re, double im) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", re, im);
  return buf;
}

void render(std::ostream& os, const std::string& key, const ordered_json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_matrix(v)) {
    const auto rows = v["rows"].get<long long>();
    const auto cols = v["cols"].get<long long>();
    os << pad << key << ": " << rows << "x" << cols << "\n";
    const auto& data = v["data"];
    for (long long r = 0; r < rows; ++r) {
      os << pad << "  [";
      for (long long c = 0; c < cols; ++c) {
        const auto& e = data[static_cast<std::size_t>(r * cols + c)];
        os << " " << format_complex(e[0].get<double>(), e[1].get<double>());
      }
      os << " ]\n";
    }
  } else if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, child] : v.items()) render(os, k, child, indent + 2);
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    os << pad << key << ": " << v.size() << " item(s)\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      render(os, key + "[" + std::to_string(k) + "]", v[k], indent + 2);
    }
  } else if (v.is_array()) {
    os << pad << key << ": [";
    for (std::size_t k = 0; k < v.size(); ++k) {
      os << (k ? ", " : "") << (v[k].is_number_float() ? format_number(v[k].get<double>()) : v[k].dump());
    }
    os << "]\n";
  } else if (v.is_number_float()) {
    os << pad << key << ": " << format_number(v.get<double>()) << "\n";
  } else if (v.is_string()) {
    os << pad << key << ": " << v.get<std::string>() << "\n";
  } else {
    os << pad << key << ": " << v.dump() << "\n";
  }
}

void emit_report(std::ostream& out, const Context& ctx) {
  ordered_json report;
  report["command"] = ctx.command;
  report["inputs"] = ctx.inputs;
  report["tolerances"] = ctx.tolerances();
  report["verdict"] = ctx.verdict;
  if (ctx.json_output) {
    out << report.dump(2) << "\n";
    return;
  }
  out << "command: " << ctx.command << "\n";
  for (const auto& in : ctx.inputs) {
    out << "input " << in["role"].get<std::string>() << ": " << in["path"].get<std::string>()
        << " (sha256 " << in["sha256"].get<std::string>().substr(0, 16) << ")\n";
  }
  out << "tolerances: residual=" << format_number(ctx.tol.residual)
      << " rank_cutoff=" << format_number(ctx.tol.rank_cutoff) << "\n";
  for (const auto& [k, v] : ctx.verdict.items()) render(out, k, v, 0);
}

std::string error_name(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
  if (dynamic_cast<const SingularMatrixError*>(&e)) return "SingularMatrixError";
  if (dynamic_cast<const NotHermitianError*>(&e)) return "NotHermitianError";
  if (dynamic_cast<const NotPositiveError*>(&e)) return "NotPositiveError";
  if (dynamic_cast<const InconsistentInputError*>(&e)) return "InconsistentInputError";
  if (dynamic_cast<const InvalidToleranceError*>(&e)) return "InvalidToleranceError";
  return "Error";
}

// ---- commands ----------------------------------------------------------

int cmd_basis(Context& ctx, const std::string& s_path) {
  const CMatrix S = ctx.matrix("S", s_path);
  require_square_input(S, "S");
  const SubalgebraBasis b = compute_basis(S, ctx.tol);
  double membership = 0.0;
  double orthonormality = 0.0;
  ordered_json elems = ordered_json::array();
  for (Index i = 0; i < b.dim(); ++i) {
    membership = std::max(membership, u_S_membership(S, b.basis[i], ctx.tol).residual);
    for (Index j = 0; j < b.dim(); ++j) {
      const double ip = (b.basis[i].adjoint() * b.basis[j]).trace().real();
      orthonormality = std::max(orthonormality, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
    elems.push_back(matrix_to_json(b.basis[i]));
  }
  ctx.verdict["n"] = S.rows();
  ctx.verdict["dim"] = b.dim();
  ctx.verdict["membership_residual"] = membership;
  ctx.verdict["orthonormality_residual"] = orthonormality;
  ctx.verdict["basis"] = std::move(elems);
  return kVerdictTrue;
}

int cmd_member(Context& ctx, const std::string& s_path, const std::string& x_path, bool group) {
  const CMatrix S = ctx.matrix("S", s_path);
  const CMatrix X = ctx.matrix("X", x_path);
  const Verdict v = group ? U_S_membership(S, X, ctx.tol) : u_S_membership(S, X, ctx.tol);
  ctx.verdict["set"] = group ? "U_S" : "u_S";
  ctx.verdict["member"] = verdict_json(v);
  return exit_for(v.holds);
}

int cmd_conjugate(Context& ctx, const std::string& v_path, const std::string& x_path) {
  const CMatrix V = ctx.matrix("V", v_path);
  const CMatrix X = ctx.matrix("X", x_path);
  ctx.verdict["result"] = matrix_to_json(conjugation_map(V, X, ctx.tol));
  return kVerdictTrue;
}

int cmd_complex_structure(Context& ctx, const std::string& s_path, const std::string& j_path) {
  const CMatrix S = ctx.matrix("S", s_path);
  require_square_input(S, "S");
  const MapRep J = ctx.map("J", j_path);
  const SubalgebraBasis b = compute_basis(S, ctx.tol);
  const ComplexStructureReport rep =
      complex_structure_report(b, [&](const CMatrix& X) { return J.apply(X); }, ctx.tol);
  ctx.verdict["dim"] = b.dim();
  ctx.verdict["is_complex_structure"] = rep.is_complex_structure();
  ctx.verdict["preserves_subspace"] = rep.preserves_subspace;
  ctx.verdict["subspace_residual"] = rep.subspace_residual;
  ctx.verdict["squares_to_minus_identity"] = rep.squares_to_minus_identity;
  ctx.verdict["square_residual"] = rep.square_residual;
  ctx.verdict["bracket_compatible"] = rep.bracket_compatible;
  ctx.verdict["bracket_residual"] = rep.bracket_residual;
  ctx.verdict["threshold"] = rep.threshold;
  return exit_for(rep.is_complex_structure());
}

int cmd_apply(Context& ctx, const std::string& psi_path, const std::string& x_path) {
  const MapRep psi = ctx.map("PSI", psi_path);
  const CMatrix X = ctx.matrix("X", x_path);
  ctx.verdict["result"] = matrix_to_json(apply(psi, X));
  return kVerdictTrue;
}

int cmd_bracket(Context& ctx, const std::optional<std::string>& psi_path,
                const std::string& x_path, const std::string& y_path) {
  std::optional<MapRep> psi;
  if (psi_path) psi = ctx.map("PSI", *psi_path);
  const CMatrix X = ctx.matrix("X", x_path);
  const CMatrix Y = ctx.matrix("Y", y_path);
  ctx.verdict["bracket"] = psi ? "twisted" : "commutator";
  ctx.verdict["result"] =
      matrix_to_json(psi ? twisted_bracket(*psi, X, Y) : commutator(X, Y));
  return kVerdictTrue;
}

int cmd_jacobi(Context& ctx, const std::string& psi_path, const std::vector<std::string>& xyz,
               std::size_t keep) {
  const MapRep psi = ctx.map("PSI", psi_path);
  if (!xyz.empty()) {
    if (xyz.size() != 3) {
      throw InputError("jacobi: pass either no matrices or exactly three (X Y Z)");
    }
    const CMatrix X = ctx.matrix("X", xyz[0]);
    const CMatrix Y = ctx.matrix("Y", xyz[1]);
    const CMatrix Z = ctx.matrix("Z", xyz[2]);
    Verdict v;
    v.residual = jacobi_defect(psi, X, Y, Z);
    v.threshold = ctx.tol.residual * jacobi_scale(psi, X, Y, Z);
    v.holds = v.residual <= v.threshold;
    ctx.verdict["mode"] = "triple";
    ctx.verdict["jacobi"] = verdict_json(v);
    return exit_for(v.holds);
  }
  const JacobiSweep sweep = jacobi_sweep(psi, ctx.tol, keep);
  ordered_json worst = ordered_json::array();
  const Index n = psi.n();
  auto unit_name = [n](Index k) {
    return "E" + std::to_string(k % n + 1) + std::to_string(k / n + 1);
  };
  for (const auto& t : sweep.worst) {
    ordered_json e;
    e["x"] = unit_name(t.x);
    e["y"] = unit_name(t.y);
    e["z"] = unit_name(t.z);
    e["defect"] = t.defect;
    worst.push_back(std::move(e));
  }
  ctx.verdict["mode"] = "matrix-unit sweep";
  ctx.verdict["triples"] = n * n * n * n * n * n;
  Verdict v{sweep.satisfies_jacobi(), sweep.max_defect, sweep.threshold};
  ctx.verdict["jacobi"] = verdict_json(v);
  ctx.verdict["worst"] = std::move(worst);
  return exit_for(v.holds);
}

int cmd_commutant(Context& ctx, const std::string& a_path, const std::string& b_path) {
  const CMatrix A = ctx.matrix("A", a_path);
  const CMatrix B = ctx.matrix("B", b_path);
  const Verdict v = commutant_condition(A, B, ctx.tol);
  ctx.verdict["image_in_commutant"] = verdict_json(v);
  return exit_for(v.holds);
}

int cmd_s_hermitian(Context& ctx, const std::string& s_path, const std::string& a_path) {
  const CMatrix S = ctx.matrix("S", s_path);
  const CMatrix A = ctx.matrix("A", a_path);
  const Verdict v = s_hermitian(S, A, ctx.tol);
  ctx.verdict["s_hermitian"] = verdict_json(v);
  return exit_for(v.holds);
}

int cmd_restricts(Context& ctx, const std::string& s_path, const std::string& a_path) {
  const CMatrix S = ctx.matrix("S", s_path);
  const CMatrix A = ctx.matrix("A", a_path);
  require_square_input(S, "S");
  const SubalgebraBasis b = compute_basis(S, ctx.tol);
  const Verdict v = restriction_verdict(S, A, b, ctx.tol);
  ctx.verdict["dim"] = b.dim();
  ctx.verdict["restricts"] = verdict_json(v);
  return exit_for(v.holds);
}

int cmd_coincide(Context& ctx, const std::string& psi_path) {
  const MapRep psi = ctx.map("PSI", psi_path);
  const CoincidenceReport rep = bracket_coincidence_report(psi, ctx.tol);
  ctx.verdict["coincides"] = rep.coincides;
  ctx.verdict["max_deviation"] = rep.max_deviation;
  ctx.verdict["threshold"] = rep.threshold;
  ctx.verdict["psi_of_identity"] = matrix_to_json(rep.psi_of_identity);
  ctx.verdict["psi_of_identity_minus_identity"] =
      (rep.psi_of_identity - identity(psi.n())).norm();
  return exit_for(rep.coincides);
}

int cmd_choi(Context& ctx, const std::string& psi_path) {
  const MapRep psi = ctx.map("PSI", psi_path);
  const ChoiMatrix J = choi(psi);
  ctx.verdict["n"] = J.n;
  ctx.verdict["rank"] = rank(J.matrix, ctx.tol);
  ctx.verdict["hermiticity_residual"] = (J.matrix - J.matrix.adjoint()).norm();
  ctx.verdict["choi"] = matrix_to_json(J.matrix);
  return kVerdictTrue;
}

int cmd_cp_check(Context& ctx, const std::string& psi_path) {
  const MapRep psi = ctx.map("PSI", psi_path);
  const PositivityReport rep = positivity_report(psi, ctx.tol);
  ctx.verdict["completely_positive"] = rep.completely_positive;
  ctx.verdict["min_eigenvalue"] = rep.min_eigenvalue;
  ctx.verdict["hermiticity_residual"] = rep.hermiticity_residual;
  ctx.verdict["choi_norm"] = rep.choi_norm;
  ctx.verdict["threshold"] = rep.threshold;
  return exit_for(rep.completely_positive);
}

void channel_properties(Context& ctx, const KrausSet& K) {
  ctx.verdict["unital"] = verdict_json(unitality(K, ctx.tol));
  ctx.verdict["trace_preserving"] = verdict_json(trace_preservation(K, ctx.tol));
}

int cmd_kraus(Context& ctx, const std::string& psi_path) {
  const MapRep psi = ctx.map("PSI", psi_path);
  const KrausDecomposition dec = kraus_decomposition(choi(psi), ctx.tol);
  ctx.verdict["count"] = dec.kraus.size();
  ctx.verdict["discarded_mass"] = dec.discarded_mass;
  ctx.verdict["roundtrip_residual"] = map_distance(psi, dec.kraus.as_map());
  ctx.verdict["eigenvalues"] = std::vector<double>(dec.eigenvalues.data(),
                                                   dec.eigenvalues.data() + dec.eigenvalues.size());
  channel_properties(ctx, dec.kraus);
  ctx.verdict["kraus"] = kraus_set_to_json(dec.kraus);
  return kVerdictTrue;
}

int cmd_channel_props(Context& ctx, const std::string& k_path) {
  const KrausSet K = ctx.kraus("K", k_path);
  channel_properties(ctx, K);
  return exit_for(ctx.verdict["unital"]["holds"].get<bool>() &&
                  ctx.verdict["trace_preserving"]["holds"].get<bool>());
}

int cmd_pairs(Context& ctx, const std::string& psi_path) {
  const MapRep psi = ctx.map("PSI", psi_path);
  const PairDecomposition dec = general_pair_decomposition(psi, ctx.tol);
  const Index n = psi.n();
  ordered_json pairs = ordered_json::array();
  std::vector<KrausPair> kept = dec.pairs;
  if (kept.empty()) kept.push_back({CMatrix::Zero(n, n), CMatrix::Zero(n, n)});
  for (const KrausPair& p : kept) {
    ordered_json e;
    e["A"] = matrix_to_json(p.left);
    e["B"] = matrix_to_json(p.right);
    pairs.push_back(std::move(e));
  }
  ctx.verdict["count"] = dec.pairs.size();
  ctx.verdict["discarded_mass"] = dec.discarded_mass;
  ctx.verdict["roundtrip_residual"] = map_distance(psi, MapRep::from_kraus_pairs(kept));
  ctx.verdict["singular_values"] = std::vector<double>(
      dec.singular_values.data(), dec.singular_values.data() + dec.singular_values.size());
  ctx.verdict["pairs"] = std::move(pairs);
  return kVerdictTrue;
}

int cmd_convert(Context& ctx, const std::string& psi_path, const std::string& to,
                const std::optional<std::string>& output) {
  const MapRep psi = ctx.map("PSI", psi_path);
  ordered_json converted;
  if (to == "superop") {
    converted = map_to_json_superop(psi);
  } else if (to == "kraus_pairs") {
    converted = map_to_json_pairs(psi, ctx.tol);
  } else {
    throw InputError("convert: --to must be \"superop\" or \"kraus_pairs\"");
  }
  const MapRep back = map_from_json(nlohmann::json::parse(converted.dump()), "converted map");
  ctx.verdict["form"] = to;
  ctx.verdict["roundtrip_residual"] = map_distance(psi, back);
  if (output) {
    std::ofstream os(*output, std::ios::binary);
    if (!os) throw InputError(*output + ": cannot write file");
    os << converted.dump(2) << "\n";
    ctx.verdict["written"] = *output;
  } else {
    ctx.verdict["map"] = std::move(converted);
  }
  return kVerdictTrue;
}

int cmd_intertwine(Context& ctx, const std::string& k1_path, const std::string& k2_path) {
  const KrausSet K1 = ctx.kraus("K1", k1_path);
  const KrausSet K2 = ctx.kraus("K2", k2_path);
  const IntertwinerResult res = unitary_intertwiner(K1, K2, ctx.tol);
  ctx.verdict["size"] = res.U.rows();
  ctx.verdict["reproduction_residual"] = res.reproduction_residual;
  ctx.verdict["unitarity_residual"] = res.unitarity_residual;
  ctx.verdict["U"] = matrix_to_json(res.U);
  return kVerdictTrue;
}

int cmd_recover(Context& ctx, const std::string& phi_path) {
  const MapRep phi = ctx.map("PHI", phi_path);
  const RecoveryResult res = detect_conjugation(phi, ctx.tol);
  ctx.verdict["is_conjugation"] = res.is_conjugation;
  ctx.verdict["pair_rank"] = res.pair_rank;
  ctx.verdict["residual"] = res.residual;
  ctx.verdict["balance_residual"] = res.balance_residual;
  ctx.verdict["discarded_rank_mass"] = res.discarded_rank_mass;
  if (res.V) ctx.verdict["V"] = matrix_to_json(*res.V);
  return exit_for(res.is_conjugation);
}

int cmd_iso_check(Context& ctx, const std::string& s_path, const std::string& t_path,
                  const std::string& v_path) {
  const CMatrix S = ctx.matrix("S", s_path);
  const CMatrix T = ctx.matrix("T", t_path);
  const CMatrix V = ctx.matrix("V", v_path);
  const LieIsomorphismReport rep = lie_isomorphism_report(S, T, V, ctx.tol);
  ctx.verdict["isomorphism"] = rep.holds;
  ctx.verdict["dim_source"] = rep.dim_source;
  ctx.verdict["dim_target"] = rep.dim_target;
  ctx.verdict["transported"] = rep.transported;
  ctx.verdict["transport_residual"] = rep.transport_residual;
  ctx.verdict["brackets_preserved"] = rep.brackets_preserved;
  ctx.verdict["bracket_residual"] = rep.bracket_residual;
  return exit_for(rep.holds);
}

int cmd_stab_conjugacy(Context& ctx, const std::string& s_path, const std::string& t_path,
                       const std::string& v_path, const std::optional<std::string>& samples_path) {
  const CMatrix S = ctx.matrix("S", s_path);
  const CMatrix T = ctx.matrix("T", t_path);
  const CMatrix V = ctx.matrix("V", v_path);
  require_square_input(S, "S");
  std::vector<CMatrix> samples;
  if (samples_path) {
    samples = matrix_list_from_json(ctx.load("samples", *samples_path).document, "samples",
                                    *samples_path);
  } else {
    samples = default_stabilizer_samples(compute_basis(S, ctx.tol));
  }
  const StabilizerConjugacyReport rep = stabilizer_conjugacy_report(S, T, V, samples, ctx.tol);
  ctx.verdict["conjugate"] = rep.holds;
  ctx.verdict["sample_source"] = samples_path ? "file" : "default";
  ctx.verdict["samples"] = rep.samples;
  ctx.verdict["stabilizing"] = rep.stabilizing;
  ctx.verdict["disagreements"] = rep.disagreements;
  ctx.verdict["relation_residual"] = rep.relation_residual;
  ctx.verdict["disagreeing_samples"] = rep.disagreeing_samples;
  return exit_for(rep.holds);
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {"basis", "Real-orthonormal basis and dimension of u_S", {"compute_basis"}},
      {"member", "Membership of X in u_S (or U_S with --group)",
       {"is_in_u_S", "is_in_U_S", "stabilizer_membership"}},
      {"conjugate", "Apply X -> V X V^{-1}", {"conjugation_map"}},
      {"complex-structure", "Check a candidate complex structure J on u_S",
       {"check_complex_structure"}},
      {"apply", "Evaluate psi(X)", {"apply"}},
      {"bracket", "Commutator, or twisted bracket with --psi", {"commutator", "twisted_bracket"}},
      {"jacobi", "Jacobi defect of [,]_psi (matrix-unit sweep or one triple)",
       {"jacobi_defect"}},
      {"commutant", "Whether the image of X -> A X lies in the commutant of B",
       {"check_commutant_condition"}},
      {"s-hermitian", "Whether S A^* = A S", {"is_S_hermitian"}},
      {"restricts", "Whether [,]_psi with psi(X) = A X restricts to u_S",
       {"restricts_to_subalgebra"}},
      {"coincide", "Compare [,]_psi with the commutator", {"bracket_coincidence_report"}},
      {"choi", "Choi matrix of psi", {"choi"}},
      {"cp-check", "Complete positivity of psi", {"is_completely_positive"}},
      {"kraus", "Kraus operators of a completely positive psi", {"kraus_from_choi"}},
      {"channel-props", "Unitality and trace preservation of a Kraus set",
       {"is_unital", "is_trace_preserving"}},
      {"pairs", "General pair representation psi(X) = sum A X B^*",
       {"general_pair_representation"}},
      {"convert", "Re-emit a map file in superop or kraus_pairs form", {"map_conversion"}},
      {"intertwine", "Unitary relating two Kraus sets of one map", {"unitary_intertwiner"}},
      {"recover", "Decide whether a map is X -> V X V^{-1} and recover V",
       {"detect_conjugation"}},
      {"iso-check", "Whether X -> V X V^{-1} is a Lie isomorphism u_S -> u_T",
       {"verify_lie_isomorphism"}},
      {"stab-conjugacy", "Sampled check that stab(T) = V stab(S) V^{-1}",
       {"verify_stabilizer_conjugacy"}},
  };
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sunitary: S-unitary Lie algebras, twisted brackets and Choi/Kraus analysis",
               "sunitary"};
  app.fallthrough();
  app.require_subcommand(1);

  Context ctx;
  app.add_option("--tol", ctx.tol.residual, "Relative residual tolerance (default 1e-9)");
  app.add_option("--rank-tol", ctx.tol.rank_cutoff, "Relative rank cutoff (default 1e-10)");
  app.add_flag("--json", ctx.json_output, "Machine-readable JSON report");

  // Positional storage; each subcommand binds the slots it needs.
  std::string p1, p2, p3;
  std::vector<std::string> extra;
  std::optional<std::string> psi_opt, samples_opt, output_opt;
  bool group = false;
  std::size_t keep = 1;
  std::string to = "superop";

  std::function<int()> action;
  auto sub = [&](const std::string& name) -> CLI::App* {
    const auto& table = command_table();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const CommandInfo& c) { return c.name == name; });
    return app.add_subcommand(name, it->summary);
  };
  auto req = [](CLI::App* s, const char* name, std::string& slot, const char* help) {
    s->add_option(name, slot, help)->required();
  };

  {
    auto* s = sub("basis");
    req(s, "S", p1, "Matrix file for S");
    s->callback([&] { action = [&] { return cmd_basis(ctx, p1); }; });
  }
  {
    auto* s = sub("member");
    req(s, "S", p1, "Matrix file for S");
    req(s, "X", p2, "Matrix file for X");
    s->add_flag("--group", group, "Test X S X^* = S (membership in U_S) instead");
    s->callback([&] { action = [&] { return cmd_member(ctx, p1, p2, group); }; });
  }
  {
    auto* s = sub("conjugate");
    req(s, "V", p1, "Matrix file for V");
    req(s, "X", p2, "Matrix file for X");
    s->callback([&] { action = [&] { return cmd_conjugate(ctx, p1, p2); }; });
  }
  {
    auto* s = sub("complex-structure");
    req(s, "S", p1, "Matrix file for S");
    req(s, "J", p2, "Map file for J");
    s->callback([&] { action = [&] { return cmd_complex_structure(ctx, p1, p2); }; });
  }
  {
    auto* s = sub("apply");
    req(s, "PSI", p1, "Map file");
    req(s, "X", p2, "Matrix file");
    s->callback([&] { action = [&] { return cmd_apply(ctx, p1, p2); }; });
  }
  {
    auto* s = sub("bracket");
    s->add_option("--psi", psi_opt, "Map file; omit for the commutator");
    req(s, "X", p1, "Matrix file for X");
    req(s, "Y", p2, "Matrix file for Y");
    s->callback([&] { action = [&] { return cmd_bracket(ctx, psi_opt, p1, p2); }; });
  }
  {
    auto* s = sub("jacobi");
    req(s, "PSI", p1, "Map file");
    s->add_option("XYZ", extra, "Optional X Y Z matrix files");
    s->add_option("--sweep", keep, "Number of worst matrix-unit triples to list (default 1)")
        ->check(CLI::PositiveNumber);
    s->callback([&] { action = [&] { return cmd_jacobi(ctx, p1, extra, keep); }; });
  }
  {
    auto* s = sub("commutant");
    req(s, "A", p1, "Matrix file for A");
    req(s, "B", p2, "Matrix file for B");
    s->callback([&] { action = [&] { return cmd_commutant(ctx, p1, p2); }; });
  }
  {
    auto* s = sub("s-hermitian");
    req(s, "S", p1, "Matrix file for S");
    req(s, "A", p2, "Matrix file for A");
    s->callback([&] { action = [&] { return cmd_s_hermitian(ctx, p1, p2); }; });
  }
  {
    auto* s = sub("restricts");
    req(s, "S", p1, "Matrix file for S");
    req(s, "A", p2, "Matrix file for A");
    s->callback([&] { action = [&] { return cmd_restricts(ctx, p1, p2); }; });
  }
  {
    auto* s = sub("coincide");
    req(s, "PSI", p1, "Map file");
    s->callback([&] { action = [&] { return cmd_coincide(ctx, p1); }; });
  }
  {
    auto* s = sub("choi");
    req(s, "PSI", p1, "Map file");
    s->callback([&] { action = [&] { return cmd_choi(ctx, p1); }; });
  }
  {
    auto* s = sub("cp-check");
    req(s, "PSI", p1, "Map file");
    s->callback([&] { action = [&] { return cmd_cp_check(ctx, p1); }; });
  }
  {
    auto* s = sub("kraus");
    req(s, "PSI", p1, "Map file");
    s->callback([&] { action = [&] { return cmd_kraus(ctx, p1); }; });
  }
  {
    auto* s = sub("channel-props");
    req(s, "K", p1, "Kraus set file");
    s->callback([&] { action = [&] { return cmd_channel_props(ctx, p1); }; });
  }
  {
    auto* s = sub("pairs");
    req(s, "PSI", p1, "Map file");
    s->callback([&] { action = [&] { return cmd_pairs(ctx, p1); }; });
  }
  {
    auto* s = sub("convert");
    req(s, "PSI", p1, "Map file");
    s->add_option("--to", to, "Target form: superop or kraus_pairs")
        ->check(CLI::IsMember({"superop", "kraus_pairs"}));
    s->add_option("--output,-o", output_opt, "Write the converted map file here");
    s->callback([&] { action = [&] { return cmd_convert(ctx, p1, to, output_opt); }; });
  }
  {
    auto* s = sub("intertwine");
    req(s, "K1", p1, "Kraus set file (A_i)");
    req(s, "K2", p2, "Kraus set file (B_j)");
    s->callback([&] { action = [&] { return cmd_intertwine(ctx, p1, p2); }; });
  }
  {
    auto* s = sub("recover");
    req(s, "PHI", p1, "Map file");
    s->callback([&] { action = [&] { return cmd_recover(ctx, p1); }; });
  }
  {
    auto* s = sub("iso-check");
    req(s, "S", p1, "Matrix file for S");
    req(s, "T", p2, "Matrix file for T");
    req(s, "V", p3, "Matrix file for V");
    s->callback([&] { action = [&] { return cmd_iso_check(ctx, p1, p2, p3); }; });
  }
  {
    auto* s = sub("stab-conjugacy");
    req(s, "S", p1, "Matrix file for S");
    req(s, "T", p2, "Matrix file for T (= V S V^*)");
    req(s, "V", p3, "Matrix file for V");
    s->add_option("--samples", samples_opt, "Sample file; default: exponentials of a u_S basis");
    s->callback(
        [&] { action = [&] { return cmd_stab_conjugacy(ctx, p1, p2, p3, samples_opt); }; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    ctx.command = app.get_subcommands().front()->get_name();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerdictTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerdictTrue;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    ctx.tol.validate();
    const int code = action();
    emit_report(out, ctx);
    return code;
  } catch (const std::exception& e) {
    const std::string name = error_name(e);
    err << "error (" << name << "): " << e.what() << "\n";
    if (ctx.json_output) {
      ordered_json report;
      report["command"] = ctx.command;
      report["inputs"] = ctx.inputs;
      report["error"] = {{"type", name}, {"message", e.what()}};
      out << report.dump(2) << "\n";
    }
    return kUsageError;
  }
}

}  // namespace sunitary::cli
