#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "trisum/factor.hpp"
#include "trisum/parse.hpp"
#include "trisum/poly_gcd.hpp"
#include "trisum/shift_equiv.hpp"
#include "trisum/summability.hpp"
#include "trisum/telescoper.hpp"

namespace trisum::cli {

using nlohmann::json;

namespace {

class Timer {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Input {
  RatFunc f;
  std::vector<MultiPoly> factors;
  bool hinted = false;
  const std::vector<MultiPoly>* hint() const { return hinted ? &factors : nullptr; }
};

Input read_function(const CliConfig& cfg, const std::string& text) {
  Input in;
  if (!cfg.pre_factored) {
    in.f = parse_expr(text);
    return in;
  }
  PreFactored pf = parse_prefactored(text);
  in.f = pf.value;
  in.hinted = true;
  for (auto& [p, e] : pf.den_factors) {
    if (p.is_constant()) continue;
    MultiPoly n = p.normalized();
    if (std::find(in.factors.begin(), in.factors.end(), n) != in.factors.end()) continue;
    for (auto& q : in.factors)
      if (!gcd(p, q).is_constant())
        throw std::invalid_argument("pre-factored denominators " + p.to_string() + " and " +
                                    q.to_string() + " are not coprime");
    if (cfg.check_irreducible) {
      Factorization fz = factor(p);
      if (fz.factors.size() != 1 || fz.factors[0].multiplicity != 1)
        throw std::invalid_argument("pre-factored denominator " + p.to_string() + " is reducible");
    }
    in.factors.push_back(n);
  }
  return in;
}

json vec(const ShiftVector& v) { return json::array({v.m, v.n, v.k}); }

std::string axes_text(unsigned axes) {
  std::string s;
  for (int v = 0; v < kNumVars; ++v)
    if (axes & (1u << v)) s += var_name(v);
  return s;
}

void need(const std::vector<std::string>& inputs, std::size_t lo, std::size_t hi, const char* usage) {
  if (inputs.size() < lo || inputs.size() > hi)
    throw std::invalid_argument(std::string("usage: ") + usage);
}

void summable(const CliConfig& cfg, const std::vector<std::string>& inputs, Report& r, Timer& t,
              json& timings) {
  need(inputs, 1, 1, "summable F");
  Input in = read_function(cfg, inputs[0]);
  timings["parse_ms"] = t.lap();
  Base base = in.f.contains(X) ? Base::QX : Base::Q;
  SummabilityResult s = is_summable(in.f, base, in.hint());
  timings["decide_ms"] = t.lap();
  r.data["input"] = in.f.to_string();
  r.data["base"] = base == Base::Q ? "Q" : "Q(x)";
  r.data["summable"] = s.summable;
  r.data["decision"] = s.summable;
  std::ostringstream out;
  out << "summable: " << (s.summable ? "true" : "false") << "\n";
  if (s.certificate) {
    bool ok = check_certificate(in.f, s.certificate->first, s.certificate->second);
    timings["verify_ms"] = t.lap();
    r.data["certificate"] = {{"g", s.certificate->first.to_string()},
                             {"h", s.certificate->second.to_string()}};
    r.data["verified"] = ok;
    out << "g = " << s.certificate->first.to_string() << "\n"
        << "h = " << s.certificate->second.to_string() << "\n"
        << "verified: " << (ok ? "true" : "false") << "\n";
  } else {
    json res = json::array();
    for (auto& sf : s.residue) {
      res.push_back({{"numerator", sf.a.to_string()}, {"denominator", sf.d.to_string()}, {"power", sf.j}});
      out << "residue: (" << sf.a.to_string() << ")/(" << sf.d.to_string() << ")^" << sf.j << "\n";
    }
    r.data["residue"] = res;
  }
  r.text = out.str();
}

void telescope(const CliConfig& cfg, const std::vector<std::string>& inputs, Report& r, Timer& t,
               json& timings) {
  need(inputs, 1, 1, "telescope F");
  Input in = read_function(cfg, inputs[0]);
  timings["parse_ms"] = t.lap();
  TelescoperConstruction c;
  if (cfg.construct)
    c = construct_telescoper(in.f, cfg.max_order, in.hint());
  else
    c.decision = exists_telescoper(in.f, in.hint());
  timings["decide_ms"] = t.lap();
  const TelescoperDecision& d = c.decision;
  r.data["input"] = in.f.to_string();
  r.data["exists"] = d.exists;
  r.data["decision"] = d.exists;
  r.data["case"] = to_string(d.tag);
  r.data["notes"] = d.notes;
  std::ostringstream out;
  out << "exists: " << (d.exists ? "true" : "false") << "\ncase: " << to_string(d.tag) << "\n";
  for (auto& n : d.notes) out << "  " << n << "\n";
  if (d.witness) {
    const TelescoperWitness& w = *d.witness;
    bool ok = verify(w.L, in.f, w.g, w.h);
    timings["verify_ms"] = t.lap();
    r.data["L"] = w.L.to_string();
    r.data["certificate"] = {{"g", w.g.to_string()}, {"h", w.h.to_string()}};
    r.data["verified"] = ok;
    out << "L = " << w.L.to_string() << "\ng = " << w.g.to_string() << "\nh = " << w.h.to_string()
        << "\nverified: " << (ok ? "true" : "false") << "\n";
  } else if (cfg.construct && d.exists) {
    r.data["reason"] = c.reason;
    out << "no telescoper of order <= " << cfg.max_order << " (" << c.reason << ")\n";
    r.exit_code = kBoundExceeded;
  }
  r.text = out.str();
}

void verify_cmd(const std::vector<std::string>& inputs, Report& r, Timer& t, json& timings) {
  need(inputs, 2, 4, "verify L F [G H]");
  if (inputs.size() == 3) throw std::invalid_argument("usage: verify L F [G H]");
  OrePoly L = parse_ore(inputs[0]);
  RatFunc f = parse_expr(inputs[1]);
  std::optional<std::pair<RatFunc, RatFunc>> cert;
  if (inputs.size() == 4) cert = std::pair{parse_expr(inputs[2]), parse_expr(inputs[3])};
  timings["parse_ms"] = t.lap();
  bool ok = false;
  if (cert) {
    ok = verify(L, f, cert->first, cert->second);
  } else {
    SummabilityResult s = is_summable(L.apply(f), Base::QX);
    if (s.certificate) {
      cert = s.certificate;
      ok = verify(L, f, cert->first, cert->second);
    }
  }
  timings["verify_ms"] = t.lap();
  r.data["L"] = L.to_string();
  r.data["input"] = f.to_string();
  r.data["verified"] = ok;
  r.data["decision"] = ok;
  std::ostringstream out;
  out << "verified: " << (ok ? "true" : "false") << "\n";
  if (cert) {
    r.data["certificate"] = {{"g", cert->first.to_string()}, {"h", cert->second.to_string()}};
    out << "g = " << cert->first.to_string() << "\nh = " << cert->second.to_string() << "\n";
  }
  r.text = out.str();
}

json factor_json(const MultiPoly& p, std::ostringstream& out, const char* label) {
  Factorization fz = factor(p);
  json fs = json::array();
  out << label << ": " << fz.content.get_str();
  for (auto& fac : fz.factors) {
    fs.push_back({{"poly", fac.poly.to_string()}, {"multiplicity", fac.multiplicity}});
    out << " * (" << fac.poly.to_string() << ")";
    if (fac.multiplicity > 1) out << "^" << fac.multiplicity;
  }
  out << "\n";
  return {{"content", fz.content.get_str()}, {"factors", fs}};
}

void factor_cmd(const std::vector<std::string>& inputs, Report& r, Timer& t, json& timings) {
  need(inputs, 1, 1, "factor P");
  RatFunc f = parse_expr(inputs[0]);
  timings["parse_ms"] = t.lap();
  if (f.is_zero()) throw std::invalid_argument("cannot factor zero");
  std::ostringstream out;
  r.data["input"] = f.to_string();
  r.data["numerator"] = factor_json(f.num(), out, "numerator");
  if (!f.is_polynomial()) r.data["denominator"] = factor_json(f.den(), out, "denominator");
  timings["decide_ms"] = t.lap();
  r.text = out.str();
}

MultiPoly read_poly(const std::string& text) {
  RatFunc f = parse_expr(text);
  if (!f.is_polynomial()) throw std::invalid_argument("expected a polynomial: " + text);
  return f.num() / f.den().constant_value();
}

void shift_equiv(const CliConfig& cfg, const std::vector<std::string>& inputs, Report& r, Timer& t,
                 json& timings) {
  need(inputs, 1, 2, "shift-equiv P [Q]");
  MultiPoly p = read_poly(inputs[0]);
  std::ostringstream out;
  r.data["p"] = p.to_string();
  r.data["axes"] = axes_text(cfg.axes);
  if (inputs.size() == 1) {
    timings["parse_ms"] = t.lap();
    Lattice stab = stabilizer_lattice(p).restricted(cfg.axes);
    timings["decide_ms"] = t.lap();
    json basis = json::array();
    out << "stabilizer basis:";
    for (auto& b : stab.basis()) {
      basis.push_back(vec(b));
      out << " " << to_string(b);
    }
    out << "\n";
    r.data["stabilizer"] = basis;
    r.data["decision"] = true;
  } else {
    MultiPoly q = read_poly(inputs[1]);
    timings["parse_ms"] = t.lap();
    std::optional<ShiftVector> v = find_shift(p, q, cfg.axes);
    timings["decide_ms"] = t.lap();
    r.data["q"] = q.to_string();
    r.data["found"] = v.has_value();
    r.data["decision"] = v.has_value();
    out << "found: " << (v ? "true" : "false") << "\n";
    if (v) {
      r.data["shift"] = vec(*v);
      out << "shift: " << to_string(*v) << "\n";
    }
  }
  r.text = out.str();
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::Summable: return "summable";
    case Command::Telescope: return "telescope";
    case Command::Verify: return "verify";
    case Command::Factor: return "factor";
    case Command::ShiftEquiv: return "shift-equiv";
  }
  return "?";
}

unsigned parse_axes(const std::string& s) {
  unsigned mask = 0;
  for (char c : s) {
    if (c == 'x') mask |= 1;
    else if (c == 'y') mask |= 2;
    else if (c == 'z') mask |= 4;
    else throw std::invalid_argument("axes must be letters from x, y, z: " + s);
  }
  if (mask == 0) throw std::invalid_argument("empty axes");
  return mask;
}

Report run(const CliConfig& cfg, const std::vector<std::string>& inputs) {
  Report r;
  r.data["schema"] = 1;
  r.data["command"] = command_name(cfg.command);
  r.data["config"] = {{"construct", cfg.construct},
                      {"max_order", cfg.max_order},
                      {"axes", axes_text(cfg.axes)},
                      {"pre_factored", cfg.pre_factored},
                      {"check_irreducible", cfg.check_irreducible},
                      {"output", cfg.json ? "json" : "text"}};
  json timings = json::object();
  Timer t;
  try {
    switch (cfg.command) {
      case Command::Summable: summable(cfg, inputs, r, t, timings); break;
      case Command::Telescope: telescope(cfg, inputs, r, t, timings); break;
      case Command::Verify: verify_cmd(inputs, r, t, timings); break;
      case Command::Factor: factor_cmd(inputs, r, t, timings); break;
      case Command::ShiftEquiv: shift_equiv(cfg, inputs, r, t, timings); break;
    }
  } catch (const ParseError& e) {
    r.exit_code = kParseError;
    r.data["error"] = e.what();
    r.data["position"] = e.position();
    r.text = std::string("error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    r.exit_code = kParseError;
    r.data["error"] = e.what();
    r.text = std::string("error: ") + e.what() + "\n";
  }
  r.data["timings"] = timings;
  return r;
}

}  // namespace trisum::cli
