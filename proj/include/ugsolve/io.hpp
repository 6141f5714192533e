#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ugsolve/certify.hpp"
#include "ugsolve/instance.hpp"
#include "ugsolve/types.hpp"

namespace ugsolve {

// Line-based text formats. '#' starts a comment; blank lines are ignored;
// tokens are whitespace-separated. Malformed input raises ParseError with a
// 1-based line number.
//
// Instance:
//   uginst 1
//   mode cyclic|perm
//   q <q>
//   n <n>
//   density full|dense
//   [delta <d>]                       dense only, optional
//   <u> <v> <c>                       cyclic, x_u - x_v = c (mod q)
//   <u> <v> <p_0> ... <p_{q-1}>       perm, x_v = p[x_u]
// One line per present edge with u < v. A dense file without a delta line
// gets delta = 1 - min_degree / (n - 1).
//
// Assignment:   ugassign 1, then n lines "<v> <label>".
// Certificate:  ugcert 1, "seed <s>", "triangles <k>", then k lines "u v w".

void write_instance(std::ostream& out, const AnyInstance& g);
AnyInstance read_instance(std::istream& in);
std::string instance_to_string(const AnyInstance& g);
AnyInstance instance_from_string(std::string_view text);

void write_assignment(std::ostream& out, const Assignment& a);
Assignment read_assignment(std::istream& in);

void write_certificate(std::ostream& out, const PackingCertificate& cert);
PackingCertificate read_certificate(std::istream& in);

/// File wrappers; an unreadable path raises ParseError at line 0.
AnyInstance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const AnyInstance& g);
Assignment load_assignment(const std::filesystem::path& path);
void save_assignment(const std::filesystem::path& path, const Assignment& a);

}  // namespace ugsolve
