// Copyright 2026 The Riccimorph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "riccimorph/errors.hpp"
#include "riccimorph/mesh.hpp"

namespace riccimorph {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r\n");
    if (i == std::string::npos || line[i] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    return true;
  }
  return false;
}

std::string lower_ext(const std::string& path) {
  const size_t dot = path.find_last_of('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot + 1);
  for (char& c : ext) c = char(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

}  // namespace

TriMesh load_off(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("OFF: empty file");
  {
    std::istringstream hs(line);
    std::string header;
    hs >> header;
    if (header != "OFF") throw ParseError("OFF: bad header '" + header + "'");
  }
  if (!next_data_line(in, line)) throw ParseError("OFF: missing counts line");
  long nv = 0, nf = 0, ne = 0;
  {
    std::istringstream cs(line);
    if (!(cs >> nv >> nf >> ne) || nv < 0 || nf < 0)
      throw ParseError("OFF: bad counts line '" + line + "'");
  }
  std::vector<Vec3> vertices;
  vertices.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    if (!next_data_line(in, line))
      throw ParseError("OFF: expected " + std::to_string(nv) +
                       " vertices, got " + std::to_string(i));
    std::istringstream vs(line);
    Vec3 p{};
    if (!(vs >> p[0] >> p[1] >> p[2]))
      throw ParseError("OFF: bad vertex line '" + line + "'");
    vertices.push_back(p);
  }
  std::vector<std::array<int, 3>> faces;
  faces.reserve(nf);
  for (long i = 0; i < nf; ++i) {
    if (!next_data_line(in, line))
      throw ParseError("OFF: expected " + std::to_string(nf) +
                       " faces, got " + std::to_string(i));
    std::istringstream fs(line);
    int count = 0;
    if (!(fs >> count)) throw ParseError("OFF: bad face line '" + line + "'");
    if (count != 3)
      throw ParseError("OFF: only triangle faces supported, got " +
                       std::to_string(count) + " vertices");
    std::array<int, 3> t{};
    if (!(fs >> t[0] >> t[1] >> t[2]))
      throw ParseError("OFF: bad face line '" + line + "'");
    faces.push_back(t);
  }
  return build_mesh(std::move(vertices), std::move(faces));
}

TriMesh load_obj(std::istream& in) {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::string line;
  while (next_data_line(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Vec3 p{};
      if (!(ls >> p[0] >> p[1] >> p[2]))
        throw ParseError("OBJ: bad vertex line '" + line + "'");
      vertices.push_back(p);
    } else if (tag == "f") {
      std::array<int, 3> t{};
      std::string tok;
      int c = 0;
      while (ls >> tok) {
        if (c >= 3)
          throw ParseError("OBJ: only triangle faces supported: '" + line +
                           "'");
        // "i", "i/j", "i/j/k", "i//k" all carry the vertex index first
        int idx = 0;
        try {
          idx = std::stoi(tok.substr(0, tok.find('/')));
        } catch (const std::exception&) {
          throw ParseError("OBJ: bad face token '" + tok + "'");
        }
        if (idx <= 0)
          throw ParseError("OBJ: face index must be positive, got " + tok);
        t[c++] = idx - 1;
      }
      if (c != 3) throw ParseError("OBJ: bad face line '" + line + "'");
      faces.push_back(t);
    }
    // normals, texcoords, materials, groups are ignored
  }
  return build_mesh(std::move(vertices), std::move(faces));
}

TriMesh load_mesh(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mesh file: " + path);
  std::string fmt = format;
  for (char& c : fmt) c = char(std::tolower(static_cast<unsigned char>(c)));
  if (fmt == "off") return load_off(in);
  if (fmt == "obj") return load_obj(in);
  throw ParseError("unsupported mesh format '" + format + "': " + path);
}

TriMesh load_mesh(const std::string& path) {
  return load_mesh(path, lower_ext(path));
}

void write_off(const TriMesh& mesh, std::ostream& out) {
  out << "OFF\n"
      << mesh.num_vertices() << ' ' << mesh.num_faces() << ' '
      << mesh.num_edges() << '\n';
  char buf[128];
  for (const Vec3& p : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p[0], p[1], p[2]);
    out << buf;
  }
  for (const auto& t : mesh.faces)
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void save_off(const TriMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  write_off(mesh, out);
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace riccimorph
