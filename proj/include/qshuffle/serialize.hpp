#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qshuffle/element.hpp"

namespace qshuffle {

/// Malformed text input. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& found);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Text grammar:
//   element := term (('+' | '-') term)*  |  '0'
//   term    := [coeff '*'] word
//   word    := ('x[' ints ']')? ('y[' ints ']')?  |  '1'
//   ints    := int (',' int)*            (each int >= 1)
// Tensor terms join two words with ' (x) '.

std::string format_word(const Word& w);
std::string format_element(const Element& e);
std::string format_tensor(const TensorElement& t);

Word parse_word(std::string_view text);
Element parse_element(std::string_view text, PrimeField field);
TensorElement parse_tensor(std::string_view text, PrimeField field);

nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);
nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j, PrimeField field);
nlohmann::json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const nlohmann::json& j, PrimeField field);

}  // namespace qshuffle
