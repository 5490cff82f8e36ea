#include "dloci/manifest.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "dloci/error.hpp"

namespace dloci {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::ManifestError, "unknown output format '" + name + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "text";
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ManifestError, what); }

void only_keys(const YAML::Node& node, const std::string& section, const std::set<std::string>& allowed) {
  if (!node.IsMap()) fail("section '" + section + "' must be a table");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) fail("unknown key '" + key + "' in section '" + section + "'");
  }
}

YAML::Node required(const YAML::Node& node, const std::string& section, const std::string& key) {
  const YAML::Node v = node[key];
  if (!v) fail("missing key '" + key + "' in section '" + section + "'");
  return v;
}

template <class T>
T scalar(const YAML::Node& v, const std::string& where) {
  if (!v.IsScalar()) fail(where + " must be a scalar");
  try {
    return v.as<T>();
  } catch (const YAML::Exception&) {
    fail(where + " has the wrong type: '" + v.Scalar() + "'");
  }
}

IntVector int_vector(const YAML::Node& v, const std::string& where) {
  if (!v.IsSequence()) fail(where + " must be an array");
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(scalar<std::int64_t>(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    fail(std::string("malformed manifest: ") + e.what());
  }
  if (!root.IsMap()) fail("manifest must be a table of sections");
  only_keys(root, "<root>", {"manifold", "spinu", "compute"});

  const YAML::Node mf = required(root, "<root>", "manifold");
  only_keys(mf, "manifold", {"chi", "sigma", "intersection"});
  const auto chi = scalar<std::int64_t>(required(mf, "manifold", "chi"), "manifold.chi");
  const auto sigma = scalar<std::int64_t>(required(mf, "manifold", "sigma"), "manifold.sigma");
  const YAML::Node rows = required(mf, "manifold", "intersection");
  if (!rows.IsSequence()) fail("manifold.intersection must be an array of rows");
  IntMatrix q;
  for (std::size_t i = 0; i < rows.size(); ++i)
    q.push_back(int_vector(rows[i], "manifold.intersection[" + std::to_string(i) + "]"));

  Manifest out;
  out.manifold = manifold_new(chi, sigma, q);

  {
    const YAML::Node sp = required(root, "<root>", "spinu");
    only_keys(sp, "spinu", {"lambda", "kappa", "w"});
    const IntVector lambda = int_vector(required(sp, "spinu", "lambda"), "spinu.lambda");
    const auto kappa = scalar<std::int64_t>(required(sp, "spinu", "kappa"), "spinu.kappa");
    const IntVector w = sp["w"] ? int_vector(sp["w"], "spinu.w") : IntVector(out.manifold->b2(), 0);
    out.spinu.emplace(out.manifold, lambda, kappa, w);
  }

  if (const YAML::Node c = root["compute"]) {
    only_keys(c, "compute", {"max_order", "symbolic", "format"});
    if (c["max_order"]) {
      const auto order = scalar<std::int64_t>(c["max_order"], "compute.max_order");
      if (order < 1) fail("compute.max_order must be at least 1");
      out.max_order = static_cast<unsigned>(order);
    }
    if (c["symbolic"]) out.symbolic = scalar<bool>(c["symbolic"], "compute.symbolic");
    if (c["format"]) out.format = parse_output_format(scalar<std::string>(c["format"], "compute.format"));
  }
  return out;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read manifest '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

}  // namespace dloci
