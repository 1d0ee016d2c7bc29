from autcodes.cli import main_exit

main_exit()
