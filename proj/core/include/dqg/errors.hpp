#pragma once

#include <stdexcept>
#include <string>

namespace dqg {

/// Malformed input text (CoNLL-U, WordNet database, eval examples, gold files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vocabulary query named a key the model does not contain.
class MissingWordError : public std::runtime_error {
public:
    explicit MissingWordError(const std::string& key)
        : std::runtime_error("word not in vocabulary: " + key), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Corrupt or truncated binary model file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dqg
