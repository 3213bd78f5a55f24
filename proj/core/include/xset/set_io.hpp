#ifndef XSET_SET_IO_HPP
#define XSET_SET_IO_HPP

#include <filesystem>
#include <iosfwd>

#include "xset/bounded_set.hpp"

namespace xset {

// XSET1 binary format, bit-exact round trip:
//   bytes 0..5   ASCII "XSET1\n"
//   bytes 6..13  little-endian u64 universe_max U
//   then ceil((U+1)/64) little-endian u64 words; word i bit j (LSB = bit 0)
//   is the membership of 64*i + j.
void write_xset(const BoundedSet& s, std::ostream& os);
BoundedSet read_xset(std::istream& is);

void save_xset(const BoundedSet& s, const std::filesystem::path& path);
BoundedSet load_xset(const std::filesystem::path& path);

}  // namespace xset

#endif
