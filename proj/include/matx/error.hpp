#pragma once

#include <stdexcept>
#include <string>

namespace matx {

enum class Errc {
  NotAMatroid,
  EmptyBases,
  TooLarge,
  BadRank,
  DeleteEverything,
  HasLoops,
  HasColoops,
  NotConnected,
  BadBasepoint,
  NotPure,
  DimensionDrops,
  TooManyFaces,
  EmptyComplex,
  BadParams,
  NotKCM,
  PreconditionUnreachable,
  BadInput,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAMatroid: return "NotAMatroid";
    case Errc::EmptyBases: return "EmptyBases";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadRank: return "BadRank";
    case Errc::DeleteEverything: return "DeleteEverything";
    case Errc::HasLoops: return "HasLoops";
    case Errc::HasColoops: return "HasColoops";
    case Errc::NotConnected: return "NotConnected";
    case Errc::BadBasepoint: return "BadBasepoint";
    case Errc::NotPure: return "NotPure";
    case Errc::DimensionDrops: return "DimensionDrops";
    case Errc::TooManyFaces: return "TooManyFaces";
    case Errc::EmptyComplex: return "EmptyComplex";
    case Errc::BadParams: return "BadParams";
    case Errc::NotKCM: return "NotKCM";
    case Errc::PreconditionUnreachable: return "PreconditionUnreachable";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace matx
