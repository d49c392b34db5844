#include "cirfocus/attrs.hpp"

#include <json.hpp>

#include "cirfocus/util.hpp"

namespace cirfocus {

using nlohmann::json;

const AttributeVocab& AttributeVocab::instance() {
  static const AttributeVocab v = {
      {"dog", "dress", "shirt", "shoe", "hat", "bag", "chair", "ball"},
      {"red", "blue", "green", "black", "white", "yellow"},
      {"plain", "striped", "dotted", "floral", "checked"},
      {"none", "tree", "beach", "road", "room"},
      {"none", "low", "high"},
  };
  return v;
}

int AttributeVocab::total_size() const {
  return static_cast<int>(object_class.size() + color.size() + pattern.size() +
                          background.size() + clutter.size());
}

namespace {

int find_or_throw(const std::vector<std::string>& vocab, const std::string& v,
                  const char* field) {
  for (std::size_t i = 0; i < vocab.size(); ++i)
    if (vocab[i] == v) return static_cast<int>(i);
  throw IngestError(std::string("unknown ") + field + " attribute value: " + v);
}

}  // namespace

std::vector<double> attr_one_hot(const AttributeImage& a) {
  const auto& v = AttributeVocab::instance();
  std::vector<double> out(static_cast<std::size_t>(v.total_size()), 0.0);
  int base = 0;
  auto set = [&](const std::vector<std::string>& vocab, const std::string& val,
                 const char* field) {
    if (!val.empty()) out[static_cast<std::size_t>(base + find_or_throw(vocab, val, field))] = 1.0;
    base += static_cast<int>(vocab.size());
  };
  set(v.object_class, a.object_class, "object_class");
  set(v.color, a.color, "color");
  set(v.pattern, a.pattern, "pattern");
  set(v.background, a.background, "background");
  set(v.clutter, a.clutter, "clutter");
  return out;
}

std::string attr_canonical(const AttributeImage& a) {
  return "object_class=" + a.object_class + "|color=" + a.color +
         "|pattern=" + a.pattern + "|background=" + a.background +
         "|clutter=" + a.clutter;
}

std::string attr_image_id(const AttributeImage& a) {
  return "img_" + fnv1a64_hex(attr_canonical(a));
}

std::string attr_to_json(const AttributeImage& a) {
  json j;
  j["object_class"] = a.object_class;
  j["color"] = a.color;
  j["pattern"] = a.pattern;
  j["background"] = a.background;
  j["clutter"] = a.clutter;
  return j.dump();
}

AttributeImage attr_from_json(const std::string& text) {
  json j = json::parse(text);
  AttributeImage a;
  a.object_class = j.value("object_class", "");
  a.color = j.value("color", "");
  a.pattern = j.value("pattern", "");
  a.background = j.value("background", "");
  a.clutter = j.value("clutter", "");
  return a;
}

}  // namespace cirfocus
