from pseudoline_workbench.cli import main

main()
