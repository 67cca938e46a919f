#include "ramanpt_app/commands.hpp"

int main(int argc, char** argv)
{
    return ramanpt::app::run(argc, argv);
}
