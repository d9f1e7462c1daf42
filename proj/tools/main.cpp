#include "lagsieve/campaign.hpp"

int main(int argc, char** argv) { return lagsieve::cli_main(argc, argv); }
