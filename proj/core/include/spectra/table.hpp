#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spectra/generate.hpp"

namespace spectra {

/// What is known about leafless connected graphs whose spectrum has exactly
/// t sizes, at one fixed girth.
struct TableEntry {
    enum class Kind {
        UniqueCycle,  // the cycle of that girth is the only member
        Empty,        // no member of that girth exists
        Exists,       // a non-cycle member of that girth is known to exist
        NotCovered,   // no claim is made for this girth
    };

    Kind kind = Kind::NotCovered;
    int cycle_order = 0;  // set only when kind is UniqueCycle

    std::string to_string() const;  // "C_13", "empty", "exists", "open"
};

/// Known outcome for class size t at the given girth. Requires t >= 1 and
/// girth >= 3.
TableEntry table_entry(int t, int girth);

/// Evidence from one bounded exhaustive search: every connected graph with
/// minimum degree >= 2, exactly the given girth and order <= n_max whose
/// spectrum has t sizes, against the expected entry.
struct TableCellReport {
    int t = 0;
    int girth = 0;
    int n_max = 0;
    std::vector<std::string> found;  // canonical graph6, discovery order
    TableEntry expected;
    bool consistent = false;

    std::string to_text() const;  // "[PASS] table-cell t=... girth=...: ..."
    std::string to_json() const;
};

/// Generates all candidate graphs up to n_max, classifies each, and compares
/// the members found with the expected entry. A bounded search cannot refute
/// an Exists or NotCovered entry, so those are always consistent; Empty
/// demands no members, and UniqueCycle demands exactly the one cycle
/// whenever n_max admits it.
TableCellReport verify_table_cell(int t, int girth, int n_max,
                                  const SearchLimits& limits = {});

/// Same report, with candidates read from a stream of graph6 lines instead
/// of generated. The stream is untrusted: graphs that are disconnected, have
/// a leaf, the wrong girth, or more than n_max vertices are dropped, as are
/// isomorphic duplicates.
TableCellReport verify_table_cell(int t, int girth, int n_max,
                                  std::istream& input,
                                  const SearchLimits& limits = {});

/// Searches the same ground set for non-cycle members of class t at the
/// given girth. Empty output at a bounded order is not evidence of absence.
std::vector<std::string> hunt_delta(int t, int girth, int n_max,
                                    const SearchLimits& limits = {});

}  // namespace spectra
