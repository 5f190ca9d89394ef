#pragma once

#include <string>

namespace lexmatch::textproc {

// Classic Porter stemming algorithm (the original, not Porter2/Snowball).
//
// Input is expected to be a lowercase token. Words of length <= 2 and words
// containing any character outside [a-z] (digits, non-ASCII) are returned
// unchanged. Deterministic: same input always yields the same stem.
std::string porter_stem(std::string word);

}  // namespace lexmatch::textproc
