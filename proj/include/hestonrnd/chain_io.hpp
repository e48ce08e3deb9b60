#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hestonrnd/calibration.hpp"

namespace hestonrnd::chain_io {

/// Result of parsing a chain file: the validated chain plus non-fatal
/// warnings (e.g. mids increasing in strike).
struct IngestResult {
    calibration::OptionChain chain;
    std::vector<std::string> warnings;
};

/// Parses a chain file. Format: UTF-8 CSV with metadata header lines
///   #spot=, #rate=, #dividend= (optional), #tau_days=, #v0= (optional)
/// followed by `strike,mid` or `strike,bid,ask` rows. Blank lines and
/// `#`-comments are skipped. Throws std::runtime_error with the offending
/// line number on parse or invariant failures.
IngestResult parse_chain(std::istream& in, const std::string& origin = "<stream>");

/// parse_chain on the named file; throws if the file cannot be opened.
IngestResult ingest_chain(const std::string& path);

}  // namespace hestonrnd::chain_io
