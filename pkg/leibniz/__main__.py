from leibniz.main import main

main()
