#include "polyphase/cli.hpp"

int main(int argc, char** argv) { return polyphase::run(argc, argv); }
