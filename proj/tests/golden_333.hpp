#pragma once
// Matrices of the (d, n, r) = (3, 3, 3) generic resolution, transcribed
// entry by entry; x1, x2, x3 stand for x, y, z.

#include <string>
#include <vector>

namespace golden {

inline const std::vector<std::vector<std::string>> g333_h1 = {
    {"x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2", "x3^3"},
};

inline const std::vector<std::vector<std::string>> g333_h2 = {
    {"-x2", "0", "0", "0", "0", "0", "-x3", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"x1", "-x2", "0", "0", "0", "0", "0", "-x3", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "-x2", "0", "0", "0", "x1", "0", "-x3", "0", "0", "0", "0", "0", "0"},
    {"0", "x1", "0", "-x2", "0", "0", "0", "0", "0", "-x3", "0", "0", "0", "0", "0"},
    {"0", "0", "x1", "0", "-x2", "0", "0", "x1", "0", "0", "-x3", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "-x2", "0", "0", "x1", "0", "0", "-x3", "0", "0", "0"},
    {"0", "0", "0", "x1", "0", "0", "0", "0", "0", "0", "0", "0", "-x3", "0", "0"},
    {"0", "0", "0", "0", "x1", "0", "0", "0", "0", "x1", "0", "0", "x2", "-x3", "0"},
    {"0", "0", "0", "0", "0", "x1", "0", "0", "0", "0", "x1", "0", "0", "x2", "-x3"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "x1", "0", "0", "x2"},
};

inline const std::vector<std::vector<std::string>> g333_h3 = {
    {"x3", "0", "0", "0", "0", "0"},
    {"0", "x3", "0", "0", "0", "0"},
    {"-x1", "0", "x3", "0", "0", "0"},
    {"0", "0", "0", "x3", "0", "0"},
    {"0", "-x1", "0", "0", "x3", "0"},
    {"0", "0", "-x1", "0", "0", "x3"},
    {"-x2", "0", "0", "0", "0", "0"},
    {"x1", "-x2", "0", "0", "0", "0"},
    {"0", "0", "-x2", "0", "0", "0"},
    {"0", "x1", "0", "-x2", "0", "0"},
    {"0", "0", "x1", "0", "-x2", "0"},
    {"0", "0", "0", "0", "0", "-x2"},
    {"0", "0", "0", "x1", "0", "0"},
    {"0", "0", "0", "0", "x1", "0"},
    {"0", "0", "0", "0", "0", "x1"},
};

inline const std::vector<std::vector<std::string>> g333_v1 = {
    {"-t[4,0,0]", "-t[3,1,0]", "-t[3,0,1]", "-t[2,2,0]", "-t[2,1,1]", "-t[2,0,2]", "-t[1,3,0]", "-t[1,2,1]", "-t[1,1,2]", "-t[1,0,3]"},
    {"-t[3,1,0]", "-t[2,2,0]", "-t[2,1,1]", "-t[1,3,0]", "-t[1,2,1]", "-t[1,1,2]", "-t[0,4,0]", "-t[0,3,1]", "-t[0,2,2]", "-t[0,1,3]"},
    {"-t[3,0,1]", "-t[2,1,1]", "-t[2,0,2]", "-t[1,2,1]", "-t[1,1,2]", "-t[1,0,3]", "-t[0,3,1]", "-t[0,2,2]", "-t[0,1,3]", "-t[0,0,4]"},
};

inline const std::vector<std::vector<std::string>> g333_v2 = {
    {"0", "0", "0", "0", "0", "0", "-t[4,0,0]", "-t[3,1,0]", "-t[3,0,1]", "-t[2,2,0]", "-t[2,1,1]", "-t[2,0,2]", "-t[1,3,0]", "-t[1,2,1]", "-t[1,1,2]"},
    {"0", "0", "0", "0", "0", "0", "-t[3,1,0]", "-t[2,2,0]", "-t[2,1,1]", "-t[1,3,0]", "-t[1,2,1]", "-t[1,1,2]", "-t[0,4,0]", "-t[0,3,1]", "-t[0,2,2]"},
    {"0", "0", "0", "0", "0", "0", "-t[3,0,1]", "-t[2,1,1]", "-t[2,0,2]", "-t[1,2,1]", "-t[1,1,2]", "-t[1,0,3]", "-t[0,3,1]", "-t[0,2,2]", "-t[0,1,3]"},
    {"t[4,0,0]", "t[3,1,0]", "t[3,0,1]", "t[2,2,0]", "t[2,1,1]", "t[2,0,2]", "0", "0", "0", "0", "0", "0", "-t[1,2,1]", "-t[1,1,2]", "-t[1,0,3]"},
    {"t[3,1,0]", "t[2,2,0]", "t[2,1,1]", "t[1,3,0]", "t[1,2,1]", "t[1,1,2]", "0", "0", "0", "0", "0", "0", "-t[0,3,1]", "-t[0,2,2]", "-t[0,1,3]"},
    {"t[3,0,1]", "t[2,1,1]", "t[2,0,2]", "t[1,2,1]", "t[1,1,2]", "t[1,0,3]", "0", "0", "0", "0", "0", "0", "-t[0,2,2]", "-t[0,1,3]", "-t[0,0,4]"},
    {"t[2,2,0]", "t[1,3,0]", "t[1,2,1]", "t[0,4,0]", "t[0,3,1]", "t[0,2,2]", "t[2,1,1]", "t[1,2,1]", "t[1,1,2]", "t[0,3,1]", "t[0,2,2]", "t[0,1,3]", "0", "0", "0"},
    {"t[2,1,1]", "t[1,2,1]", "t[1,1,2]", "t[0,3,1]", "t[0,2,2]", "t[0,1,3]", "t[2,0,2]", "t[1,1,2]", "t[1,0,3]", "t[0,2,2]", "t[0,1,3]", "t[0,0,4]", "0", "0", "0"},
};

inline const std::vector<std::vector<std::string>> g333_v3 = {
    {"t[4,0,0]", "t[3,1,0]", "t[3,0,1]", "t[2,2,0]", "t[2,1,1]", "t[2,0,2]"},
    {"t[3,1,0]", "t[2,2,0]", "t[2,1,1]", "t[1,3,0]", "t[1,2,1]", "t[1,1,2]"},
    {"t[3,0,1]", "t[2,1,1]", "t[2,0,2]", "t[1,2,1]", "t[1,1,2]", "t[1,0,3]"},
    {"t[2,2,0]", "t[1,3,0]", "t[1,2,1]", "t[0,4,0]", "t[0,3,1]", "t[0,2,2]"},
    {"t[2,1,1]", "t[1,2,1]", "t[1,1,2]", "t[0,3,1]", "t[0,2,2]", "t[0,1,3]"},
    {"t[2,0,2]", "t[1,1,2]", "t[1,0,3]", "t[0,2,2]", "t[0,1,3]", "t[0,0,4]"},
};

inline const std::vector<std::vector<std::string>> g333_h1p = {
    {"-x3", "0", "x1", "x2", "-x1", "0", "0", "0"},
    {"0", "-x3", "0", "0", "x2", "0", "-x1", "0"},
    {"0", "0", "-x3", "0", "0", "x2", "0", "-x1"},
};

inline const std::vector<std::vector<std::string>> g333_h2p = {
    {"x2", "-x1", "0", "0", "0", "0"},
    {"0", "x2", "0", "-x1", "0", "0"},
    {"0", "0", "x2", "0", "-x1", "0"},
    {"x3", "0", "-x1", "0", "0", "0"},
    {"0", "x3", "0", "0", "-x1", "0"},
    {"0", "0", "x3", "0", "0", "-x1"},
    {"0", "0", "0", "x3", "-x2", "0"},
    {"0", "0", "0", "0", "x3", "-x2"},
};

inline const std::vector<std::vector<std::string>> g333_h3p = {
    {"x1^2"},
    {"x1*x2"},
    {"x1*x3"},
    {"x2^2"},
    {"x2*x3"},
    {"x3^2"},
};

}  // namespace golden
