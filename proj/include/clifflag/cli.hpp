#pragma once

// Command implementations behind the `clifflag` executable. Each command
// returns its exit code and output text so it can be driven in-process.

#include <json.hpp>

#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "clifflag/oracle.hpp"
#include "clifflag/roots.hpp"

namespace clifflag::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int parse = 2;
inline constexpr int collinearity = 3;
inline constexpr int multi_point_class = 4;
inline constexpr int invalid_problem = 5;
}  // namespace exit_code

struct CommandResult {
  int exit_code = exit_code::ok;
  std::string out;
  std::string err;
};

/// Resolves the p+q cap from the CLIFFLAG_MAX_DIM value (may be null).
/// Values above the hard limit are clamped and reported through `warning`.
inline int resolve_dimension_cap(const char* env_value, std::string& warning) {
  if (env_value == nullptr || *env_value == '\0') return kHardMaxDimension;
  std::string_view text(env_value);
  int cap = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap < 0)
    throw Error(errc::parse_error, "CLIFFLAG_MAX_DIM must be a non-negative integer, got '" + std::string(text) + "'");
  if (cap > kHardMaxDimension) {
    warning = "CLIFFLAG_MAX_DIM=" + std::to_string(cap) + " exceeds the hard limit; using " +
              std::to_string(kHardMaxDimension);
    cap = kHardMaxDimension;
  }
  return cap;
}

/// Parses "p,q".
inline Signature parse_signature(std::string_view text, int cap) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw Error(errc::parse_error, "signature must look like p,q");
  auto number = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = -1;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
      throw Error(errc::parse_error, "bad signature entry '" + std::string(s) + "'");
    return v;
  };
  return Signature::make(number(text.substr(0, comma)), number(text.substr(comma + 1)), cap);
}

/// Problem file: {"signature": {"p": 0, "q": 2}, "points": [...], "values": [...]}.
inline InterpolationProblem parse_problem(std::string_view json_text, int cap) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::parse_error, std::string("problem file is not valid JSON: ") + e.what());
  }
  try {
    const auto& sig_node = doc.at("signature");
    const Signature sig = Signature::make(sig_node.at("p").get<int>(), sig_node.at("q").get<int>(), cap);
    const auto points = doc.at("points").get<std::vector<std::string>>();
    const auto values = doc.at("values").get<std::vector<std::string>>();
    if (points.empty() || points.size() != values.size())
      throw Error(errc::parse_error, "points and values must be non-empty and of equal length");
    InterpolationProblem problem{sig, {}};
    for (std::size_t i = 0; i < points.size(); ++i)
      problem.pairs.push_back({parse_multivector(points[i], sig), parse_multivector(values[i], sig)});
    return problem;
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::parse_error, std::string("malformed problem file: ") + e.what());
  }
}

namespace detail {

inline int exit_code_for(errc code) {
  switch (code) {
    case errc::parse_error:
    case errc::signature_mismatch:
    case errc::wrong_signature:
    case errc::dimension_cap:
      return exit_code::parse;
    case errc::collinearity_violated:
      return exit_code::collinearity;
    case errc::multi_point_class_in_r03:
      return exit_code::multi_point_class;
    case errc::duplicate_point:
    case errc::point_not_in_cone:
    case errc::unsupported_signature:
    case errc::not_in_cone:
      return exit_code::invalid_problem;
    case errc::not_invertible:
    case errc::internal_non_invertible:
      return exit_code::internal;
  }
  return exit_code::internal;
}

template <typename Body>
CommandResult guarded(Body&& body) {
  CommandResult result;
  try {
    std::ostringstream out;
    body(out);
    result.out = out.str();
  } catch (const CollinearityError& e) {
    result.exit_code = exit_code::collinearity;
    result.err = "collinearity violated: group " + std::to_string(e.group()) + ", member " +
                 std::to_string(e.index()) + "\n" + e.what() + "\n";
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.code());
    result.err = std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    result.exit_code = exit_code::internal;
    result.err = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace detail

struct InterpolateOptions {
  bool verify = false;
  bool oracle = false;
  std::optional<std::size_t> decimal;
  std::optional<std::size_t> max_degree;
};

inline CommandResult run_interpolate(std::string_view problem_json, const InterpolateOptions& opts, int cap) {
  return detail::guarded([&](std::ostringstream& out) {
    const InterpolationProblem problem = parse_problem(problem_json, cap);
    const Polynomial p = interpolate(problem);
    out << to_string(p) << '\n';
    if (opts.verify) {
      for (std::size_t i = 0; i < problem.pairs.size(); ++i)
        out << "residual[" << i << "] = " << to_string(eval(p, problem.pairs[i].point) - problem.pairs[i].value) << '\n';
    }
    if (opts.oracle) {
      const auto bound = theorem_degree(problem);
      const OracleResult oracle = brute_force_interpolate(problem, opts.max_degree ? opts.max_degree : bound);
      std::string note;
      if (opts.max_degree && bound && *opts.max_degree > *bound)
        note = " [max-degree " + std::to_string(*opts.max_degree) + " exceeds theorem bound " +
               std::to_string(*bound) + ": outside theorem scope]";
      switch (oracle.kind) {
        case OracleResult::Kind::unique_solution:
          out << "oracle: " << (*oracle.solution == p ? "AGREE" : "DISAGREE") << note << '\n';
          break;
        case OracleResult::Kind::no_solution:
          out << "oracle: DISAGREE (no solution at degree " << *oracle.max_degree << ")" << note << '\n';
          break;
        case OracleResult::Kind::affine_family:
          out << "oracle: NONUNIQUE (family of dimension " << oracle.nullity << ", interpolant "
              << (verify_interpolant(p, problem) ? "is" : "is not") << " a member)" << note << '\n';
          break;
      }
    }
    if (opts.decimal) out << "approx[" << *opts.decimal << " digits]: " << to_decimal_string(p, *opts.decimal) << '\n';
  });
}

inline CommandResult run_eval(const Signature& sig, std::string_view poly_text, std::string_view point_text,
                              std::optional<std::size_t> decimal = std::nullopt) {
  return detail::guarded([&](std::ostringstream& out) {
    const Polynomial p = parse_polynomial(poly_text, sig);
    const Multivector x = parse_multivector(point_text, sig);
    const Multivector value = eval(p, x);
    out << to_string(value) << '\n';
    if (decimal) out << "approx[" << *decimal << " digits]: " << to_decimal_string(value, *decimal) << '\n';
  });
}

inline CommandResult run_diagnose(const Signature& sig, const std::vector<std::string>& point_texts) {
  return detail::guarded([&](std::ostringstream& out) {
    std::vector<Multivector> points;
    for (const auto& text : point_texts) points.push_back(parse_multivector(text, sig));
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    std::vector<std::optional<ClassId>> classes;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Multivector& x = points[i];
      out << "point[" << i << "]: " << to_string(x) << '\n';
      const bool cone = in_quadratic_cone(x);
      out << "  in_cone: " << yes_no(cone) << '\n';
      if (sig.is_r03()) out << "  psi+: " << to_string(psi_plus(x)) << "  psi-: " << to_string(psi_minus(x)) << '\n';
      out << "  invertible: " << yes_no(is_invertible(x)) << '\n';
      classes.push_back(cone ? std::optional<ClassId>(class_of(x)) : std::nullopt);
      out << "  class: " << (classes.back() ? classes.back()->str() : std::string("none (outside cone)")) << '\n';
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        out << "pair(" << i << "," << j << "): same_class=";
        if (classes[i] && classes[j])
          out << yes_no(*classes[i] == *classes[j]);
        else
          out << "n/a";
        out << " difference_invertible=" << yes_no(is_invertible(points[i] - points[j])) << '\n';
      }
    }
  });
}

}  // namespace clifflag::cli
