#pragma once

#include <stdexcept>
#include <string>

namespace rhythmprint {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// score_ingest
class MalformedXml : public Error { public: using Error::Error; };
class UnsupportedRoot : public Error { public: using Error::Error; };
class CompressedInputUnsupported : public Error { public: using Error::Error; };
class MissingDivisions : public Error { public: using Error::Error; };
class NegativeCursor : public Error { public: using Error::Error; };

// rhythm_core / fingerprint
class DiskOutOfRange : public Error { public: using Error::Error; };
class UnsupportedTimeSignature : public Error { public: using Error::Error; };
class ArcOverflow : public Error { public: using Error::Error; };
class RankOutOfRange : public Error { public: using Error::Error; };

// render / analysis
class CountMismatch : public Error { public: using Error::Error; };
class EmptyInput : public Error { public: using Error::Error; };

// cli / config
class ConfigError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

}  // namespace rhythmprint
