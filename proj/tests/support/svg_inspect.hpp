#pragma once

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <sstream>
#include <string>

namespace testing_support {

// Parses the SVG as XML; throws on malformed documents.
inline boost::property_tree::ptree parse_svg(const std::string& svg) {
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  return tree;
}

// Number of `element` nodes anywhere in the tree whose class attribute is `cls`
// (any class when `cls` is empty).
inline int count_elements(const boost::property_tree::ptree& tree, const std::string& element,
                          const std::string& cls = {}) {
  int n = 0;
  for (const auto& [name, child] : tree) {
    if (name == element && (cls.empty() || child.get<std::string>("<xmlattr>.class", "") == cls)) ++n;
    n += count_elements(child, element, cls);
  }
  return n;
}

// Attribute values of every matching element, in document order.
inline void collect_attr(const boost::property_tree::ptree& tree, const std::string& element, const std::string& cls,
                         const std::string& attr, std::vector<std::string>& out) {
  for (const auto& [name, child] : tree) {
    if (name == element && child.get<std::string>("<xmlattr>.class", "") == cls) {
      out.push_back(child.get<std::string>("<xmlattr>." + attr, ""));
    }
    collect_attr(child, element, cls, attr, out);
  }
}

}  // namespace testing_support
