#include <string>

#include "ddist/errors.hpp"
#include "ddist/geom.hpp"
#include "json.hpp"

namespace ddist {

namespace {

using nlohmann::json;

std::vector<double> read_coords(const json& doc, const std::string& field,
                                std::size_t dim) {
  if (!doc.is_array()) throw InputError(field + ": expected an array");
  if (doc.size() != dim) {
    throw InputError(field + ": expected " + std::to_string(dim) +
                     " coordinates, got " + std::to_string(doc.size()));
  }
  std::vector<double> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!doc[i].is_number()) {
      throw InputError(field + "[" + std::to_string(i) + "]: expected a number");
    }
    out.push_back(doc[i].get<double>());
  }
  return out;
}

AxisBox read_box(const json& doc, const std::string& field, std::size_t dim) {
  if (!doc.is_object()) throw InputError(field + ": expected an object");
  for (const char* key : {"lo", "hi"}) {
    if (!doc.contains(key)) {
      throw InputError(field + "." + key + ": missing");
    }
  }
  auto lo = read_coords(doc["lo"], field + ".lo", dim);
  auto hi = read_coords(doc["hi"], field + ".hi", dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (lo[i] > hi[i]) {
      throw InputError(field + ": lo[" + std::to_string(i) + "] > hi[" +
                       std::to_string(i) + "]");
    }
  }
  try {
    return AxisBox(std::move(lo), std::move(hi));
  } catch (const ContractError& e) {
    throw InputError(field + ": " + e.what());
  }
}

json write_box(const AxisBox& b) {
  return json{{"lo", std::vector<double>(b.lo().begin(), b.lo().end())},
              {"hi", std::vector<double>(b.hi().begin(), b.hi().end())}};
}

}  // namespace

Instance read_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document: expected an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw InputError("dim: expected an integer");
  }
  const auto dim_value = doc["dim"].get<long long>();
  if (dim_value < 1) throw InputError("dim: must be at least 1");
  const auto dim = static_cast<std::size_t>(dim_value);

  if (!doc.contains("domain")) throw InputError("domain: missing");
  AxisBox domain_box = read_box(doc["domain"], "domain", dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(domain_box.extent(i) > 0.0)) {
      throw InputError("domain: zero extent in dimension " + std::to_string(i));
    }
  }

  if (!doc.contains("boxes") || !doc["boxes"].is_array()) {
    throw InputError("boxes: expected an array");
  }
  std::vector<AxisBox> boxes;
  boxes.reserve(doc["boxes"].size());
  for (std::size_t k = 0; k < doc["boxes"].size(); ++k) {
    boxes.push_back(
        read_box(doc["boxes"][k], "boxes[" + std::to_string(k) + "]", dim));
  }
  return Instance(DomainBox(std::move(domain_box)), std::move(boxes));
}

std::string write_instance(const Instance& instance) {
  json boxes = json::array();
  for (const auto& b : instance.boxes()) boxes.push_back(write_box(b));
  json doc{{"dim", instance.dim()},
           {"domain", write_box(instance.domain().box())},
           {"boxes", std::move(boxes)}};
  return doc.dump() + "\n";
}

}  // namespace ddist
