#include "sharpineq/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "sharpineq/errors.hpp"

namespace sharp {

using nlohmann::json;

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw InputError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw InputError("cannot move output into place at '" + path + "'");
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SequenceData parse_sequence(std::istream& in) {
  std::vector<double> a;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream ls(line);
    double x;
    std::string rest;
    if (!(ls >> x) || (ls >> rest))
      throw InputError("sequence line " + std::to_string(lineno) + ": expected one real number");
    a.push_back(x);
  }
  if (a.empty()) throw InputError("sequence file has no entries");
  return SequenceData(std::move(a));
}

SequenceData read_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_sequence(in);
}

namespace {

GeometryKind parse_geometry(const std::string& s) {
  if (s == "circle") return GeometryKind::Circle;
  if (s == "torus2" || s == "torus") return GeometryKind::Torus2;
  if (s == "cylinder") return GeometryKind::Cylinder;
  throw InputError("unknown geometry '" + s + "'");
}

std::string geometry_name(GeometryKind k) {
  switch (k) {
    case GeometryKind::Circle: return "circle";
    case GeometryKind::Torus2: return "torus2";
    case GeometryKind::Cylinder: return "cylinder";
  }
  return "";
}

}  // namespace

MatrixPotential potential_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw InputError("unsupported potential schema_version");
    const GeometryKind kind = parse_geometry(j.at("geometry").get<std::string>());
    const int m = j.at("dimension").get<int>();
    const auto& grid = j.at("grid");
    std::vector<int> shape = grid.at("points").get<std::vector<int>>();
    const double L = grid.contains("half_length") ? grid.at("half_length").get<double>() : 0.0;
    const auto re = j.at("samples_re").get<std::vector<double>>();
    const auto im = j.at("samples_im").get<std::vector<double>>();
    if (re.size() != im.size()) throw InputError("samples_re and samples_im differ in length");
    std::vector<std::complex<double>> s(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) s[i] = {re[i], im[i]};
    return MatrixPotential(kind, m, std::move(shape), L, std::move(s));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed potential JSON: ") + e.what());
  }
}

json potential_to_json(const MatrixPotential& v) {
  std::vector<double> re, im;
  for (const auto& z : v.raw()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  json grid{{"points", v.shape()}};
  if (v.kind() == GeometryKind::Cylinder) grid["half_length"] = v.half_length();
  return json{{"schema_version", kSchemaVersion}, {"geometry", geometry_name(v.kind())},
              {"dimension", v.dimension()},     {"grid", grid},
              {"samples_re", re},               {"samples_im", im}};
}

// Header: "# geometry=circle dimension=1 points=64[,64] [half_length=20]"
// Rows: i0[,i1],re_00,im_00,re_10,im_10,... (column-major sample entries)
MatrixPotential potential_from_csv(std::istream& in) {
  std::string line;
  std::map<std::string, std::string> meta;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] != '#') throw InputError("potential CSV must start with a '#' header line");
    std::istringstream hs(line.substr(1));
    std::string tok;
    while (hs >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw InputError("bad header token '" + tok + "'");
      meta[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    break;
  }
  for (const char* key : {"geometry", "dimension", "points"})
    if (!meta.count(key)) throw InputError(std::string("potential CSV header lacks ") + key);
  const GeometryKind kind = parse_geometry(meta["geometry"]);
  int m = 0;
  std::vector<int> shape;
  try {
    m = std::stoi(meta["dimension"]);
    std::istringstream ps(meta["points"]);
    std::string p;
    while (std::getline(ps, p, ',')) shape.push_back(std::stoi(p));
  } catch (const std::exception&) {
    throw InputError("bad number in potential CSV header");
  }
  const double L = meta.count("half_length") ? std::stod(meta["half_length"]) : 0.0;
  const std::size_t axes = shape.size();
  if (axes < 1 || axes > 2 || m < 1) throw InputError("bad potential CSV header");
  long npts = 1;
  for (int s : shape) npts *= s;
  std::vector<std::complex<double>> samples(std::size_t(npts) * m * m);
  std::vector<char> seen(npts, 0);
  long rows = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::vector<double> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        f.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw InputError("non-numeric cell in potential CSV: '" + cell + "'");
      }
    }
    if (f.size() != axes + 2 * std::size_t(m) * m) throw InputError("potential CSV row has wrong width");
    long idx = 0, stride = 1;
    for (std::size_t a = 0; a < axes; ++a) {
      const long i = long(f[a]);
      if (i < 0 || i >= shape[a] || double(i) != f[a]) throw InputError("grid index out of range");
      idx += i * stride;
      stride *= shape[a];
    }
    if (seen[idx]) throw InputError("duplicate grid point in potential CSV");
    seen[idx] = 1;
    for (long e = 0; e < long(m) * m; ++e)
      samples[std::size_t(idx) * m * m + e] = {f[axes + 2 * e], f[axes + 2 * e + 1]};
    ++rows;
  }
  if (rows != npts) throw InputError("potential CSV does not cover every grid point");
  return MatrixPotential(kind, m, shape, L, std::move(samples));
}

std::string potential_to_csv(const MatrixPotential& v) {
  std::ostringstream os;
  os << "# geometry=" << geometry_name(v.kind()) << " dimension=" << v.dimension() << " points=";
  for (std::size_t a = 0; a < v.shape().size(); ++a) os << (a ? "," : "") << v.shape()[a];
  if (v.kind() == GeometryKind::Cylinder) os << " half_length=" << format_double(v.half_length());
  os << "\n";
  const int m = v.dimension();
  const int p0 = v.shape()[0];
  for (long i = 0; i < v.point_count(); ++i) {
    os << (i % p0);
    if (v.shape().size() == 2) os << "," << (i / p0);
    for (long e = 0; e < long(m) * m; ++e) {
      const auto z = v.raw()[std::size_t(i) * m * m + e];
      os << "," << format_double(z.real()) << "," << format_double(z.imag());
    }
    os << "\n";
  }
  return os.str();
}

MatrixPotential read_potential(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "json") {
    json j;
    try {
      j = json::parse(read_text(path));
    } catch (const json::exception& e) {
      throw InputError(std::string("potential file is not valid JSON: ") + e.what());
    }
    return potential_from_json(j);
  }
  if (ext == "csv") {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return potential_from_csv(in);
  }
  throw InputError("potential file must end in .json or .csv");
}

namespace {

// JSON has no NaN/inf; map them to null
json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json params_json(const std::map<std::string, double>& p) {
  json o = json::object();
  for (const auto& [k, v] : p) o[k] = num(v);
  return o;
}

}  // namespace

json to_json(const VerificationReport& r) {
  return json{{"kind", "verification"}, {"inequality", r.inequality}, {"lhs", num(r.lhs)},
              {"rhs", num(r.rhs)},      {"margin", num(r.margin)},    {"satisfied", r.satisfied},
              {"params", params_json(r.params)}};
}

json to_json(const ScanReport& r) {
  return json{{"kind", "scan"},
              {"scan_name", r.scan_name},
              {"grid", {{"lo", r.grid.lo}, {"hi", r.grid.hi}, {"count", r.grid.count}, {"spacing", r.grid.spacing}}},
              {"worst_value", num(r.worst_value)},
              {"worst_point", num(r.worst_point)},
              {"all_negative", r.all_negative},
              {"extras", params_json(r.extras)}};
}

json to_json(const LTBoundReport& r) {
  return json{{"kind", "lt_bound"},          {"geometry", r.geometry},
              {"gamma", r.gamma},            {"lhs", num(r.lhs)},
              {"rhs", num(r.rhs)},           {"ratio", num(r.ratio)},
              {"constant_name", r.constant_name}, {"constant_value", num(r.constant_value)},
              {"converged", r.converged},    {"satisfied", r.satisfied},
              {"note", r.note}};
}

json to_json(const VCurvePoint& p, const GreenFamily& family) {
  return json{{"kind", "vcurve_point"}, {"family", family.name()}, {"d", num(p.d)},
              {"lambda", num(p.lambda)}, {"v", num(p.v)}};
}

json to_json(const EnsembleSummary& s) {
  return json{{"kind", "ensemble"},          {"inequality", s.inequality},
              {"count", s.count},            {"violations", s.violations},
              {"worst_relative_margin", num(s.worst_relative_margin)}};
}

json to_json(const SpectrumResult& s) {
  json ev = json::array();
  for (double x : s.negative_eigenvalues) ev.push_back(x);
  return json{{"kind", "spectrum"},
              {"negative_eigenvalues", ev},
              {"truncation", s.truncation},
              {"refined_truncation", s.refined_truncation},
              {"max_relative_shift", num(s.max_relative_shift)},
              {"converged", s.converged}};
}

json make_document(const std::string& command, json records) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}, {"records", std::move(records)}};
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_double(r[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace sharp
