from fanetsim.cli import main

raise SystemExit(main())
