#include "xset/set_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace xset {

namespace {

constexpr char kMagic[6] = {'X', 'S', 'E', 'T', '1', '\n'};

void write_le64(std::ostream& os, u64 v) {
  std::array<char, 8> buf;
  for (int i = 0; i < 8; ++i) buf[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(buf.data(), 8);
}

u64 read_le64(std::istream& is) {
  std::array<char, 8> buf;
  is.read(buf.data(), 8);
  if (is.gcount() != 8) throw FormatError("xset file truncated");
  u64 v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<u64>(static_cast<unsigned char>(buf[static_cast<std::size_t>(i)])) << (8 * i);
  return v;
}

}  // namespace

void write_xset(const BoundedSet& s, std::ostream& os) {
  os.write(kMagic, 6);
  write_le64(os, s.universe_max());
  for (u64 w : s.words()) write_le64(os, w);
  if (!os) throw FormatError("xset write failed");
}

BoundedSet read_xset(std::istream& is) {
  char magic[6];
  is.read(magic, 6);
  if (is.gcount() != 6 || std::memcmp(magic, kMagic, 6) != 0)
    throw FormatError("not an XSET1 file (bad magic)");
  const u64 universe = read_le64(is);
  if (universe > kMaxUniverse) throw RangeError("xset file universe exceeds capacity");
  std::vector<u64> words(BoundedSet::words_for(universe));
  for (u64& w : words) w = read_le64(is);
  if (is.peek() != std::char_traits<char>::eof())
    throw FormatError("xset file has trailing data");
  return BoundedSet::from_words(universe, std::move(words));
}

void save_xset(const BoundedSet& s, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw FormatError("cannot open for writing: " + path.string());
  write_xset(s, os);
}

BoundedSet load_xset(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open for reading: " + path.string());
  return read_xset(is);
}

}  // namespace xset
