#pragma once

#include <string>
#include <vector>

namespace cirfocus {

// Synthetic image = attribute record. Dominant attributes carry the
// retrieval intent; noise attributes model irrelevant scene content.
// Empty string = attribute absent (its one-hot bit stays zero).
struct AttributeImage {
  std::string object_class;  // dominant
  std::string color;         // dominant
  std::string pattern;       // dominant
  std::string background;    // noise
  std::string clutter;       // noise

  bool operator==(const AttributeImage&) const = default;
};

struct AttributeVocab {
  std::vector<std::string> object_class;
  std::vector<std::string> color;
  std::vector<std::string> pattern;
  std::vector<std::string> background;
  std::vector<std::string> clutter;

  static const AttributeVocab& instance();
  int total_size() const;
};

// Multi-hot over the concatenated vocabularies. Throws on a nonempty value
// missing from its vocabulary.
std::vector<double> attr_one_hot(const AttributeImage& a);

// Canonical text form; hashing it gives the content-stable image id.
std::string attr_canonical(const AttributeImage& a);
std::string attr_image_id(const AttributeImage& a);

std::string attr_to_json(const AttributeImage& a);
AttributeImage attr_from_json(const std::string& json);

}  // namespace cirfocus
