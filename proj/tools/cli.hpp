#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dualgr.hpp"

namespace dualgr::cli {

/// Bad user input: exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("empty entry in list '" + s + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InputError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

inline json matrix_strings(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(r);
  }
  return rows;
}

class Emitter {
 public:
  Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

  /// One report per line; every report carries the version and the
  /// checksums of the certificates it read.
  void report(const std::string& command, json body, const json& checksums = json::object()) {
    json j;
    j["command"] = command;
    for (auto& [key, value] : body.items()) j[key] = value;
    j["version"] = version();
    j["checksums"] = checksums;
    if (format_ == "json") {
      out_ << j.dump() << '\n';
      return;
    }
    for (auto& [key, value] : j.items()) out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  std::string format_;
};

/// Array files are assembled; matrix files ("rows") are taken as given.
inline IntHessian hessian_input(const json& j) {
  if (j.contains("entries")) return assemble(array_from_json(j));
  return hessian_from_json(j);
}

inline Matrix<Integer> matrix_input(const json& j) {
  if (j.contains("entries")) return assemble(array_from_json(j)).m;
  if (!j.contains("rows")) throw InputError("input needs 'entries' or 'rows'");
  return rows_from_json(j.at("rows"));
}

inline json pattern_json(const FactorPattern& p) { return {{"degrees", p.degrees}, {"from", p.provenance}}; }

inline json step_json(const ScheduleStep& s) {
  json j;
  j["k"] = s.k;
  j["N"] = s.N;
  j["total"] = s.total;
  j["feasible"] = s.feasible;
  j["patterns"] = json::array();
  for (const auto& p : s.patterns) j["patterns"].push_back(pattern_json(p));
  if (s.verdict) {
    j["survivors"] = json::array();
    for (const auto& c : s.verdict->candidates) j["survivors"].push_back(c);
  }
  j["rule"] = s.rule;
  j["verdict"] = s.result.status == FactorStatus::unknown ? "undecided"
                 : s.result.degrees == DegreeMultiset{s.total} ? "irreducible"
                                                               : "factors " + degrees_to_string(s.result.degrees);
  return j;
}

inline json factor_json(int k, int N, const FactorInfo& f) {
  json j;
  j["k"] = k;
  j["N"] = N;
  j["status"] = f.status == FactorStatus::zero ? "zero" : f.status == FactorStatus::known ? "known" : "unknown";
  if (f.status == FactorStatus::known) {
    j["degrees"] = f.degrees;
    j["irreducible"] = f.degrees == DegreeMultiset{k * (N - k)};
  }
  j["source"] = f.source;
  return j;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Hessians of multilinear forms on Grassmannians"};
  app.require_subcommand(1);
  std::string format = "json";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for every random choice (default 0)");
  app.fallthrough();

  int k = 0, N = 0, trials = 20, lines = 20, max_n = 0;
  std::string input, left, right, id, jlist, tval, output, point;
  bool symbolic = false, dual = false, positions = false, skip_symbolic = false;

  auto* hessian = app.add_subcommand("hessian", "Assemble the Hessian of an array, or the symbolic H(k,N)");
  hessian->add_option("--input", input, "Array JSON");
  hessian->add_option("--k", k);
  hessian->add_option("--N", N);
  hessian->add_flag("--symbolic", symbolic);
  hessian->add_flag("--dual", dual, "Use the chart around the last coordinate plane");

  auto* detc = app.add_subcommand("det", "Exact determinant of a Hessian or matrix");
  detc->add_option("--input", input, "Array or matrix JSON");
  detc->add_option("--k", k);
  detc->add_option("--N", N);
  detc->add_flag("--symbolic", symbolic);

  auto* rankc = app.add_subcommand("rank", "Exact rank, corank and block-row ranks");
  rankc->add_option("--input", input, "Array or matrix JSON")->required();

  auto* degrees = app.add_subcommand("degrees", "Feasible degrees of irreducible factors");
  degrees->add_option("--k", k)->required();
  degrees->add_option("--N", N)->required();

  auto* irreducible = app.add_subcommand("irreducible", "Factor structure of det H(k,N) from smaller cases");
  irreducible->add_option("--k", k)->required();
  irreducible->add_option("--N", N)->required();
  irreducible->add_option("--max", max_n, "Resolve every N up to this bound");

  auto* specialize = app.add_subcommand("specialize", "Embed a direct sum of two Hessians");
  specialize->add_option("--left", left)->required();
  specialize->add_option("--right", right)->required();
  specialize->add_flag("--positions", positions, "Split positions instead of values");

  auto* duality = app.add_subcommand("duality", "Compare H(k,N) with H(N-k,N) after regrouping");
  duality->add_option("--k", k)->required();
  duality->add_option("--N", N)->required();
  duality->add_option("--trials", trials)->check(CLI::PositiveNumber);
  duality->add_flag("--symbolic", symbolic);

  auto* node = app.add_subcommand("node", "The family x(J,T), its defining forms and their limit");
  node->add_option("--k", k)->required();
  node->add_option("--N", N)->required();
  node->add_option("--J", jlist, "Comma-separated index set")->required();
  auto* topt = node->add_option("--T", tval, "Rational value of T");
  node->add_flag("--symbolic", symbolic)->excludes(topt);

  auto* verify = app.add_subcommand("verify-certificates", "Verify embedded or supplied certificates");
  verify->add_option("--id", id);
  verify->add_option("--input", input, "Certificate JSON");

  auto* verify_node = app.add_subcommand("verify-node", "Condition-by-condition node certificate report");
  verify_node->add_option("--id", id)->required();

  auto* identity = app.add_subcommand("identity-h36", "det H(3,6) = 2 det^3 M");
  identity->add_option("--trials", trials)->check(CLI::PositiveNumber);
  identity->add_option("--lines", lines)->check(CLI::PositiveNumber);
  identity->add_flag("--skip-symbolic", skip_symbolic);

  auto* critical = app.add_subcommand("critical", "Criticality and cusp membership of an array");
  critical->add_option("--input", input, "Array JSON")->required();
  critical->add_option("--point", point, "Chart point JSON {\"rows\": k x (N-k)}");

  auto* exportc = app.add_subcommand("export-certificate", "Write an embedded certificate as JSON");
  exportc->add_option("--id", id)->required();
  exportc->add_option("--output", output);

  auto* build = app.add_subcommand("build-certificate", "Corank-one certificate from the specialization rules");
  build->add_option("--k", k)->required();
  build->add_option("--N", N)->required();

  auto fail_input = [&](const std::string& msg) {
    err << json{{"error", msg}}.dump() << '\n';
    return 2;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail_input(e.what());
  }

  Emitter emit(out, format);
  auto need_shape = [&]() {
    if (k < 1 || N <= k) throw InputError("need 1 <= k < N");
  };

  try {
    if (*hessian) {
      if (symbolic) {
        need_shape();
        auto H = assemble_symbolic(k, N);
        emit.report("hessian", to_json(H, symbolic_variable_names(k, N)));
        return 0;
      }
      if (input.empty()) throw InputError("hessian needs --input or --symbolic");
      IntArray A = array_from_json(read_json_file(input));
      IntHessian H = dual ? assemble_dual(A) : assemble(A);
      json body = to_json(H);
      body["chart"] = dual ? "dual" : "standard";
      emit.report("hessian", body);
      return 0;
    }
    if (*detc) {
      if (symbolic) {
        need_shape();
        if (k * (N - k) > 12) throw InputError("symbolic determinant limited to side 12");
        IntPoly d = det(assemble_symbolic(k, N).m);
        emit.report("det", {{"k", k}, {"N", N}, {"terms", d.size()}, {"det", d.to_string(symbolic_variable_names(k, N))}});
        return 0;
      }
      if (input.empty()) throw InputError("det needs --input or --symbolic");
      Matrix<Integer> m = matrix_input(read_json_file(input));
      if (!m.square()) throw InputError("determinant needs a square matrix");
      emit.report("det", {{"side", m.rows()}, {"det", det(m).get_str()}});
      return 0;
    }
    if (*rankc) {
      json j = read_json_file(input);
      json body;
      if (j.contains("entries") || (j.contains("k") && j.contains("N"))) {
        IntHessian H = hessian_input(j);
        body["k"] = H.k;
        body["N"] = H.N;
        body["side"] = H.side();
        std::size_t r = rank_exact(H);
        body["rank"] = r;
        body["corank"] = H.side() - r;
        std::vector<std::size_t> br;
        for (int i = 1; i <= H.k; ++i) br.push_back(block_row_rank(H, i));
        body["block_row_ranks"] = br;
      } else {
        Matrix<Integer> m = matrix_input(j);
        body["rows"] = m.rows();
        body["cols"] = m.cols();
        body["rank"] = rank_exact(m);
      }
      emit.report("rank", body);
      return 0;
    }
    if (*degrees) {
      if (k < 2 || N <= k) throw InputError("need 2 <= k < N");
      emit.report("degrees", {{"total", k * (N - k)}, {"degrees", feasible_degrees(k, N)}});
      return 0;
    }
    if (*irreducible) {
      need_shape();
      FactorOracle oracle;
      json results = json::array();
      const int last = max_n ? max_n : N;
      if (last < N) throw InputError("--max must be at least --N");
      for (int n = N; n <= last; ++n) results.push_back(factor_json(k, n, oracle.resolve(k, n)));
      json steps = json::array();
      for (const auto& s : oracle.steps()) steps.push_back(step_json(s));
      emit.report("irreducible", {{"steps", steps}, {"results", results}});
      return 0;
    }
    if (*specialize) {
      IntHessian H1 = hessian_input(read_json_file(left)), H2 = hessian_input(read_json_file(right));
      IntHessian H = positions ? specialize_embed_positions(H1, H2) : specialize_embed(H1, H2);
      json body = to_json(H);
      Integer d = det(H.m), d1 = det(H1.m), d2 = det(H2.m);
      body["det"] = d.get_str();
      body["det_left"] = d1.get_str();
      body["det_right"] = d2.get_str();
      body["multiplicative"] = d == d1 * d2 || d == -(d1 * d2);
      emit.report("specialize", body);
      return body["multiplicative"].get<bool>() ? 0 : 1;
    }
    if (*duality) {
      need_shape();
      DualityReport r = duality_check(k, N, trials, seed, symbolic);
      emit.report("duality", {{"k", k},
                              {"N", N},
                              {"dual_k", N - k},
                              {"permutation", duality_permutation(k, N)},
                              {"symbolic_checked", r.symbolic_checked},
                              {"pattern_ok", r.pattern_ok},
                              {"det_equal", r.det_equal},
                              {"numeric_trials", r.numeric_trials},
                              {"numeric_ok", r.numeric_ok},
                              {"problems", r.problems},
                              {"pass", r.pass()}});
      return r.pass() ? 0 : 1;
    }
    if (*node) {
      need_shape();
      NodeIndexSet J(k, N, parse_int_list(jlist));
      json body;
      body["J"] = to_json(J.J());
      json pairs = json::array();
      for (int p = 1; p <= k; ++p) pairs.push_back({p, J.pair(p)});
      body["pairing"] = pairs;
      if (!tval.empty()) {
        Rational T;
        try {
          T = parse_rational(tval);
        } catch (const std::exception&) {
          throw InputError("--T must be a rational number");
        }
        body["T"] = T.get_str();
        body["x"] = matrix_strings(x_J_T(J, T));
      } else {
        Matrix<Laurent> K = x_J_T_symbolic(J);
        json rows = json::array();
        for (std::size_t i = 0; i < K.rows(); ++i) {
          json r = json::array();
          for (std::size_t c = 0; c < K.cols(); ++c) r.push_back(K(i, c).to_string());
          rows.push_back(r);
        }
        body["x"] = rows;
      }
      const auto names = IndexSpace(k, N).all();
      FormFamily fam = defining_forms_at(J);
      json forms = json::array();
      for (std::size_t i = 0; i < fam.rows.size(); ++i) {
        json terms = json::object();
        for (std::size_t c = 0; c < names.size(); ++c)
          if (!fam.rows[i][c].is_zero()) terms[to_string(names[c])] = fam.rows[i][c].to_string();
        forms.push_back({{"label", fam.labels[i]}, {"terms", terms}});
      }
      body["forms"] = forms;
      LimitLemmaReport lemma = limit_lemma_check(J);
      FormFamily both = concat(coordinate_forms(k, N, star(first_index(k), N), "a"), fam);
      LimitResult lim = limit_T0(both);
      body["limit_rows"] = rows_to_json(lim.forms);
      body["limit_reductions"] = lim.reductions;
      body["limit_rank"] = lemma.limit_rank;
      body["expected_rank"] = lemma.expected_rank;
      body["spans_equal"] = lemma.spans_equal;
      emit.report("node", body);
      return 0;
    }
    if (*verify) {
      std::vector<Certificate> certs;
      if (!input.empty()) {
        try {
          certs.push_back(import_certificate(read_json_file(input)));
        } catch (const InputError&) {
          throw;
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      } else if (!id.empty()) {
        certs.push_back(load_certificate(id));
      } else {
        for (const auto& c : certificate_ids()) certs.push_back(load_certificate(c));
      }
      bool all = true;
      for (const auto& c : certs) {
        VerifyReport r = verify_certificate(c, seed);
        all = all && r.pass;
        emit.report("verify-certificates", r.to_json(), {{c.id, checksum_hex(checksum(c))}});
        err << c.id << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
      }
      return all ? 0 : 1;
    }
    if (*verify_node) {
      Certificate c = load_certificate(id);
      if (c.kind != "nodepair") throw InputError("certificate '" + id + "' is not a node certificate");
      VerifyReport r = verify_certificate(c, seed);
      emit.report("verify-node", r.to_json(), {{c.id, checksum_hex(checksum(c))}});
      err << c.id << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
      return r.pass ? 0 : 1;
    }
    if (*identity) {
      IdentityH36Report r = identity_h36(trials, seed, !skip_symbolic, lines);
      emit.report("identity-h36", r.to_json());
      err << "identity-h36: " << (r.pass() ? "PASS" : "FAIL") << '\n';
      return r.pass() ? 0 : 1;
    }
    if (*critical) {
      IntArray A = array_from_json(read_json_file(input));
      const Chart chart(A.k(), A.N());
      json body;
      body["k"] = A.k();
      body["N"] = A.N();
      body["critical_at_origin"] = nabla_membership(A, first_index(A.k()));
      body["hessian_det"] = det(assemble(chart, A).m).get_str();
      body["cusp"] = cusp_membership(chart, A);
      body["generic_node_shape"] = generic_node_membership(A);
      if (!point.empty()) {
        Matrix<Integer> X = rows_from_json(read_json_file(point).at("rows"));
        if (X.rows() != static_cast<std::size_t>(A.k()) || X.cols() != static_cast<std::size_t>(A.N() - A.k()))
          throw InputError("point must be k x (N-k)");
        body["critical_at_point"] = is_critical(chart, A, X);
        body["hessian_det_at_point"] = det(hessian_at(chart, A, X).m).get_str();
      }
      emit.report("critical", body);
      return 0;
    }
    if (*exportc) {
      Certificate c = load_certificate(id);
      json j = export_certificate(c);
      if (output.empty()) {
        out << j.dump(2) << '\n';
      } else {
        std::ofstream f(output);
        if (!f) throw InputError("cannot write '" + output + "'");
        f << j.dump(2) << '\n';
      }
      return 0;
    }
    if (*build) {
      Certificate c = build_corank_certificate(k, N, seed);
      VerifyReport r = verify_certificate(c, seed);
      json body = r.to_json();
      body["certificate"] = export_certificate(c);
      json used = json::object();
      for (const auto& cid : certificate_ids())
        if (cid.rfind("corank-", 0) == 0) used[cid] = checksum_hex(embedded_checksum(cid));
      emit.report("build-certificate", body, used);
      return r.pass ? 0 : 1;
    }
  } catch (const InputError& e) {
    return fail_input(e.what());
  } catch (const std::invalid_argument& e) {
    return fail_input(e.what());
  } catch (const std::out_of_range& e) {
    return fail_input(e.what());
  } catch (const json::exception& e) {
    return fail_input(e.what());
  } catch (const std::exception& e) {
    err << json{{"error", e.what()}}.dump() << '\n';
    return 1;
  }
  return fail_input("no subcommand");
}

}  // namespace dualgr::cli
