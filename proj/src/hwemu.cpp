#include "qv/hwemu.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qv {

namespace {

bool is_pow2(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

unsigned log2_of(unsigned v) {
  unsigned w = 0;
  while ((1u << w) < v)
    ++w;
  return w;
}

std::string word_bits(uint32_t value, unsigned width) {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i)
    if ((value >> (width - 1 - i)) & 1u)
      s[i] = '1';
  return s;
}

void write_mem(const std::filesystem::path& path, const std::string& name,
               unsigned depth, unsigned width,
               const std::vector<uint32_t>& words) {
  std::ofstream f(path);
  if (!f)
    throw error(error_kind::image_format_error,
                "cannot write image file " + path.string());
  f << "memory " << name << " " << depth << "x" << width << "\n";
  for (unsigned i = 0; i < depth; ++i)
    f << word_bits(i < words.size() ? words[i] : 0, width) << "\n";
}

std::vector<uint32_t> read_mem(const std::filesystem::path& path,
                               const std::string& name, unsigned& depth,
                               unsigned& width) {
  std::ifstream f(path);
  if (!f)
    throw error(error_kind::image_format_error,
                "missing image file " + path.string());
  std::string kw, got_name, shape;
  if (!(f >> kw >> got_name >> shape) || kw != "memory" || got_name != name)
    throw error(error_kind::image_format_error,
                path.string() + ": expected header 'memory " + name + " <depth>x<width>'");
  const auto x = shape.find('x');
  if (x == std::string::npos)
    throw error(error_kind::image_format_error,
                path.string() + ": bad shape '" + shape + "'");
  try {
    depth = static_cast<unsigned>(std::stoul(shape.substr(0, x)));
    width = static_cast<unsigned>(std::stoul(shape.substr(x + 1)));
  } catch (const std::exception&) {
    throw error(error_kind::image_format_error,
                path.string() + ": bad shape '" + shape + "'");
  }
  if (width < 1 || width > 31 || depth < 1)
    throw error(error_kind::image_format_error,
                path.string() + ": bad shape '" + shape + "'");
  std::vector<uint32_t> words;
  std::string line;
  std::getline(f, line); // rest of header line
  while (std::getline(f, line)) {
    if (line.empty())
      continue;
    if (line.size() != width)
      throw error(error_kind::image_format_error,
                  path.string() + ": word '" + line + "' is not " +
                      std::to_string(width) + " bits");
    uint32_t v = 0;
    for (char c : line) {
      if (c != '0' && c != '1')
        throw error(error_kind::image_format_error,
                    path.string() + ": bad word '" + line + "'");
      v = (v << 1) | static_cast<uint32_t>(c - '0');
    }
    words.push_back(v);
  }
  if (words.size() != depth)
    throw error(error_kind::image_format_error,
                path.string() + ": expected " + std::to_string(depth) +
                    " words, got " + std::to_string(words.size()));
  return words;
}

} // namespace

unsigned memory_images::line_addr_width() const {
  return std::max(1u, log2_of(line_capacity));
}

memory_images assemble_images(const circuit& c, unsigned elem_capacity,
                              unsigned line_capacity) {
  if (!is_pow2(elem_capacity) || !is_pow2(line_capacity) || line_capacity < 2)
    throw error(error_kind::image_format_error,
                "memory depths must be powers of two (line capacity >= 2)");
  for (const auto& p : c.primitives())
    if (p.inputs.size() != 2)
      throw error(error_kind::unsupported_arity,
                  "emulator primitives must have 2 inputs; gate '" + p.output +
                      "' has " + std::to_string(p.inputs.size()));
  if (c.primitives().size() > elem_capacity)
    throw error(error_kind::capacity_exceeded,
                std::to_string(c.primitives().size()) +
                    " primitives exceed element capacity " +
                    std::to_string(elem_capacity));
  if (c.line_count() > line_capacity)
    throw error(error_kind::capacity_exceeded,
                std::to_string(c.line_count()) + " lines exceed line capacity " +
                    std::to_string(line_capacity));

  memory_images img;
  img.elem_capacity = elem_capacity;
  img.line_capacity = line_capacity;
  img.x1.assign(elem_capacity, 0);
  img.x2.assign(elem_capacity, 0);
  img.out.assign(elem_capacity, 0);
  img.q.assign(size_t{elem_capacity} * 4, 0);
  img.input_count = static_cast<unsigned>(c.input_names().size());
  img.prim_count = static_cast<unsigned>(c.primitives().size());
  for (uint32_t i = 0; i < c.line_count(); ++i)
    img.line_names.push_back(c.line_name(i));
  img.output_names = c.output_names();

  unsigned e = 0;
  for (const auto& level : c.levels()) {
    for (size_t g : level) {
      const primitive& p = c.primitives()[g];
      img.x1[e] = static_cast<uint16_t>(p.input_lines[0]);
      img.x2[e] = static_cast<uint16_t>(p.input_lines[1]);
      img.out[e] = static_cast<uint16_t>(p.output_line);
      for (uint32_t pair = 0; pair < 4; ++pair)
        img.q[size_t{e} * 4 + pair] = p.q.bit(pair);
      ++e;
    }
  }
  return img;
}

emu_result run_emulator(const memory_images& img, const pattern_set& p) {
  if (p.input_order.size() != img.input_count)
    throw error(error_kind::invalid_pattern,
                "pattern header lists " + std::to_string(p.input_order.size()) +
                    " inputs, images declare " + std::to_string(img.input_count));
  if (img.prim_count > img.x1.size() || img.prim_count > img.x2.size() ||
      img.prim_count > img.out.size() || size_t{img.prim_count} * 4 > img.q.size())
    throw error(error_kind::emu_sequence_error,
                "element counter would reach an uninitialized slot");

  // Header columns -> input line numbers.
  std::vector<uint32_t> column_lines;
  for (const auto& name : p.input_order) {
    uint32_t idx = img.input_count;
    for (uint32_t i = 0; i < img.input_count; ++i)
      if (img.line_names[i] == name) {
        idx = i;
        break;
      }
    if (idx == img.input_count)
      throw error(error_kind::semantic_error,
                  "pattern header names unknown input line '" + name + "'");
    column_lines.push_back(idx);
  }

  std::vector<uint32_t> output_lines;
  for (const auto& name : img.output_names) {
    uint32_t idx = static_cast<uint32_t>(img.line_names.size());
    for (uint32_t i = 0; i < img.line_names.size(); ++i)
      if (img.line_names[i] == name) {
        idx = i;
        break;
      }
    if (idx == img.line_names.size())
      throw error(error_kind::emu_sequence_error,
                  "output line '" + name + "' is not in the line table");
    output_lines.push_back(idx);
  }

  emu_result res;
  res.table.output_names = img.output_names;
  res.table.patterns = p.rows;

  bitvec m(img.line_capacity, 0);
  for (size_t pat = 0; pat < p.rows.size(); ++pat) {
    const auto& row = p.rows[pat];
    if (row.size() != img.input_count)
      throw error(error_kind::invalid_pattern,
                  "pattern row " + std::to_string(pat + 1) + " has " +
                      std::to_string(row.size()) + " bits, expected " +
                      std::to_string(img.input_count));
    // Initialization: one cycle per input coordinate of M.
    for (size_t i = 0; i < row.size(); ++i) {
      m[column_lines[i]] = row[i] & 1u;
      ++res.cycles;
    }
    // Element loop: two read cycles, then one combined q-read/M-write cycle.
    for (unsigned e = 0; e < img.prim_count; ++e) {
      const uint8_t v1 = m[img.x1[e]];
      ++res.cycles;
      const uint8_t v2 = m[img.x2[e]];
      ++res.cycles;
      m[img.out[e]] = img.q[size_t{e} * 4 + ((v1 << 1) | v2)];
      ++res.cycles;
    }
    bitvec out_row;
    for (uint32_t line : output_lines)
      out_row.push_back(m[line]);
    res.table.rows.push_back(std::move(out_row));
  }
  return res;
}

void dump_images(const memory_images& img, const std::string& directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);
  fs::create_directories(dir);
  const unsigned w = img.line_addr_width();
  auto widen = [](const std::vector<uint16_t>& v) {
    return std::vector<uint32_t>(v.begin(), v.end());
  };
  write_mem(dir / "x1.mem", "x1", img.elem_capacity, w, widen(img.x1));
  write_mem(dir / "x2.mem", "x2", img.elem_capacity, w, widen(img.x2));
  write_mem(dir / "out.mem", "out", img.elem_capacity, w, widen(img.out));
  write_mem(dir / "q.mem", "q", img.elem_capacity * 4, 1,
            std::vector<uint32_t>(img.q.begin(), img.q.end()));

  std::ofstream meta(dir / "meta.txt");
  if (!meta)
    throw error(error_kind::image_format_error,
                "cannot write " + (dir / "meta.txt").string());
  meta << "inputs " << img.input_count << "\n";
  meta << "primitives " << img.prim_count << "\n";
  meta << "outputs";
  for (const auto& o : img.output_names)
    meta << " " << o;
  meta << "\nlines";
  for (const auto& l : img.line_names)
    meta << " " << l;
  meta << "\n";
}

memory_images load_images(const std::string& directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);

  memory_images img;
  unsigned d1, w1, d2, w2, d3, w3, dq, wq;
  const auto x1 = read_mem(dir / "x1.mem", "x1", d1, w1);
  const auto x2 = read_mem(dir / "x2.mem", "x2", d2, w2);
  const auto out = read_mem(dir / "out.mem", "out", d3, w3);
  const auto q = read_mem(dir / "q.mem", "q", dq, wq);
  if (d1 != d2 || d1 != d3 || w1 != w2 || w1 != w3)
    throw error(error_kind::image_format_error,
                "x1/x2/out memories have inconsistent shapes");
  if (wq != 1 || dq != d1 * 4)
    throw error(error_kind::image_format_error,
                "q memory must be " + std::to_string(d1 * 4) + "x1");
  if (!is_pow2(d1))
    throw error(error_kind::image_format_error,
                "element capacity must be a power of two");
  img.elem_capacity = d1;
  img.line_capacity = 1u << w1;
  img.x1.assign(x1.begin(), x1.end());
  img.x2.assign(x2.begin(), x2.end());
  img.out.assign(out.begin(), out.end());
  img.q.assign(q.begin(), q.end());

  std::ifstream meta(dir / "meta.txt");
  if (!meta)
    throw error(error_kind::image_format_error,
                "missing " + (dir / "meta.txt").string());
  std::string line;
  while (std::getline(meta, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw))
      continue;
    if (kw == "inputs") {
      if (!(ls >> img.input_count))
        throw error(error_kind::image_format_error, "meta.txt: bad 'inputs' line");
    } else if (kw == "primitives") {
      if (!(ls >> img.prim_count))
        throw error(error_kind::image_format_error, "meta.txt: bad 'primitives' line");
    } else if (kw == "outputs") {
      std::string name;
      while (ls >> name)
        img.output_names.push_back(name);
    } else if (kw == "lines") {
      std::string name;
      while (ls >> name)
        img.line_names.push_back(name);
    } else {
      throw error(error_kind::image_format_error,
                  "meta.txt: unknown entry '" + kw + "'");
    }
  }
  if (img.prim_count > img.elem_capacity)
    throw error(error_kind::image_format_error,
                "meta.txt declares more primitives than the element capacity");
  if (img.line_names.size() > img.line_capacity ||
      img.input_count > img.line_names.size())
    throw error(error_kind::image_format_error,
                "meta.txt line table does not fit the m memory");
  for (const auto& o : img.output_names) {
    bool found = false;
    for (const auto& l : img.line_names)
      found = found || l == o;
    if (!found)
      throw error(error_kind::image_format_error,
                  "meta.txt output '" + o + "' is not in the line table");
  }
  return img;
}

} // namespace qv
