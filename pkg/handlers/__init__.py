# Обробники команд CLI
